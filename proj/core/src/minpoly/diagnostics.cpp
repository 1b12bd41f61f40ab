#include "cmpoly/minpoly/diagnostics.hpp"

#include "cmpoly/error.hpp"
#include "cmpoly/jets/admissibility.hpp"

namespace cmpoly::minpoly {

RootReport root_structure(const UniPoly& p, bool positive_definite) {
  if (!positive_definite) throw UsageError("diagnostic requires positive-definite metric");
  if (p.is_zero()) throw UsageError("root_structure of the zero polynomial");
  RootReport report;
  const auto& c = p.coefficients();
  std::size_t eps = 0;
  while (eps < c.size() && is_zero(c[eps])) ++eps;
  report.zero_root = eps > 0;
  // Q(lambda) = P / lambda^eps must be even.
  std::vector<Rational> q_mu;
  report.alternate_vanish = true;
  for (std::size_t i = eps; i < c.size(); ++i) {
    const std::size_t power = i - eps;
    if (power % 2 == 1) {
      if (!is_zero(c[i])) report.alternate_vanish = false;
    } else {
      q_mu.push_back(c[i]);
    }
  }
  if (!report.alternate_vanish || eps > 1) return report;
  const UniPoly q(q_mu);
  if (q.degree() == 0) {
    report.pure_imaginary_simple = true;
    return report;
  }
  const RootProfile neg = sturm_root_profile(q, RootRegion::negatives);
  report.pure_imaginary_simple = neg.all_simple && neg.distinct_real_roots == static_cast<std::size_t>(q.degree());
  return report;
}

RootReport root_structure(const jets::JetSequence& seq, const PolyLambda& p, const QVector& x) {
  if (!seq.positive_definite()) throw UsageError("diagnostic requires positive-definite metric");
  return root_structure(p.specialize(x), true);
}

RicciReport ricci_diagnostics(const jets::JetSequence& seq, const MinimalPolynomial& p) {
  RicciReport report;
  const int k = p.degree();
  for (int i = 1; i <= k; ++i) report.trace_zero.push_back(seq.jet(i).trace().is_zero());
  report.ricci_nonzero = !seq.jet(0).trace().is_zero();
  report.last_coefficient_zero = k >= 1 && p.a(static_cast<std::size_t>(k)).is_zero();
  report.degree_odd = k % 2 == 1;
  report.consistent = !report.ricci_nonzero ||
                      (report.last_coefficient_zero && (!seq.positive_definite() || report.degree_odd));
  return report;
}

DivisibilityReport divides(const jets::JetSequence& seq, const PolyLambda& q, const MinimalPolynomial& p) {
  const PolyMatrix residual = jets::eval_map(seq, q);
  if (!residual.is_zero()) {
    for (std::size_t r = 0; r < residual.dim(); ++r) {
      for (std::size_t c = 0; c < residual.dim(); ++c) {
        if (residual(r, c).is_zero()) continue;
        throw UsageError("Q is not in the kernel of the evaluation map: residual (" + std::to_string(r + 1) + "," +
                         std::to_string(c + 1) + ") = " + residual(r, c).to_string());
      }
    }
  }
  auto [quot, rem] = polylambda_divmod(q, p.p);
  DivisibilityReport report;
  report.divisible = rem.is_zero();
  report.quotient = std::move(quot);
  report.remainder = std::move(rem);
  return report;
}

bool unipoly_divides(const UniPoly& p, const UniPoly& q) {
  return unipoly_divmod(q, p).second.is_zero();
}

}  // namespace cmpoly::minpoly
