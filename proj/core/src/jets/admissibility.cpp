#include "cmpoly/jets/admissibility.hpp"

#include "cmpoly/error.hpp"

namespace cmpoly::jets {

PolyMatrix eval_map(const JetSequence& seq, const PolyLambda& p) {
  const std::size_t n = seq.dim();
  PolyMatrix out(n, n);
  if (p.is_zero()) return out;
  if (p.num_vars() != n) throw UsageError("polynomial has the wrong number of variables");
  const int k = p.degree();
  for (int i = 0; i <= k; ++i) {
    const MultiPoly& a = p.coefficient(static_cast<std::size_t>(i));
    if (a.is_zero()) continue;
    out += a * seq.jet(k - i);
  }
  return out;
}

AdmissibilityReport check_admissible(const JetSequence& seq, const PolyLambda& p) {
  if (!p.is_monic()) throw UsageError("polynomial is not monic: " + p.to_string());
  if (auto bad = p.first_inhomogeneous()) {
    throw UsageError("coefficient of lambda^" + std::to_string(p.degree() - static_cast<int>(*bad)) +
                     " is not homogeneous of degree " + std::to_string(*bad));
  }
  AdmissibilityReport report{p, eval_map(seq, p), false};
  report.is_admissible = report.residual.is_zero();
  return report;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::inhomogeneous: return "inhomogeneous";
    case Violation::Kind::not_self_adjoint: return "not_self_adjoint";
    case Violation::Kind::direction_not_annihilated: return "direction_not_annihilated";
  }
  return "unknown";
}

ValidationReport validate(const JetSequence& seq, int max_k) {
  ValidationReport report;
  report.max_order = max_k;
  const std::size_t n = seq.dim();
  const PolyMatrix g = PolyMatrix::constant(seq.metric(), n);
  if (auto avail = seq.available_orders()) max_k = std::min(max_k, *avail - 1);
  for (int k = 0; k <= max_k; ++k) {
    const PolyMatrix& r = seq.jet(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!r(a, b).is_homogeneous(k + 2)) {
          report.violations.push_back({k, Violation::Kind::inhomogeneous,
                                       "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")"});
        }
      }
    }
    const PolyMatrix gr = g * r;
    const PolyMatrix skew = gr - gr.transpose();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!skew(a, b).is_zero()) {
          report.violations.push_back({k, Violation::Kind::not_self_adjoint,
                                       "G*R differs from its transpose at (" + std::to_string(a + 1) + "," +
                                           std::to_string(b + 1) + "): " + skew(a, b).to_string()});
        }
      }
    }
    if (k == 0) {
      for (std::size_t a = 0; a < n; ++a) {
        MultiPoly row(n);
        for (std::size_t b = 0; b < n; ++b) row += r(a, b) * MultiPoly::variable(n, b);
        if (!row.is_zero()) {
          report.violations.push_back({0, Violation::Kind::direction_not_annihilated,
                                       "component " + std::to_string(a + 1) + " of R0(X)X = " + row.to_string()});
        }
      }
    }
  }
  return report;
}

}  // namespace cmpoly::jets
