#include "cmpoly/minpoly/solver.hpp"

#include <set>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/interpolate.hpp"
#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/jets/admissibility.hpp"
#include "cmpoly/minpoly/pointwise.hpp"
#include "cmpoly/minpoly/sampling.hpp"

namespace cmpoly::minpoly {

DegreeResult generic_degree(const jets::JetSequence& seq, std::optional<int> max_k, std::uint64_t seed,
                            std::size_t samples) {
  if (samples == 0) throw UsageError("generic_degree needs at least one sample");
  DegreeResult out;
  out.max_k = max_k.value_or(default_degree_bound(seq.dim()));
  out.samples = samples;
  out.k = -1;
  PointSampler sampler(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    QVector x = sampler.next(seq.dim());
    auto pm = pointwise_min_poly(seq, x, out.max_k);
    if (!pm) {
      out.bound_exceeded = true;
      out.k = out.max_k + 1;
      out.witness = std::move(x);
      return out;
    }
    if (pm->k > out.k) {
      out.k = pm->k;
      out.witness = std::move(x);
    }
  }
  return out;
}

std::vector<MultiPoly> solve_coefficients(const jets::JetSequence& seq, int k, std::uint64_t seed) {
  if (k < 0) throw UsageError("negative degree");
  const std::size_t n = seq.dim();
  if (k == 0) return {};
  const auto uk = static_cast<unsigned>(k);
  // The top coefficient needs the most samples; the surplus is what lets a
  // non-polynomial coefficient show up as an inconsistency.
  const std::size_t surplus = std::max<std::size_t>(8, n);
  std::size_t wanted = monomial_count(n, uk) + surplus;
  const std::size_t attempt_limit = 50 * wanted + 1000;

  PointSampler sampler(seed);
  std::set<QVector> seen;
  std::vector<std::vector<Sample>> samples(uk + 1);
  std::size_t attempts = 0;
  for (;;) {
    while (samples[1].size() < wanted) {
      if (++attempts > attempt_limit) {
        throw ComputationError("could not find enough sample points with k(X) = " + std::to_string(k));
      }
      QVector x = sampler.next(n);
      if (!seen.insert(x).second) continue;
      auto pm = pointwise_min_poly(seq, x, k);
      if (!pm) throw ComputationError("sample point has k(X) > " + std::to_string(k));
      if (pm->k < k) continue;
      for (unsigned i = 1; i <= uk; ++i) samples[i].push_back({x, pm->p.coefficient(uk - i)});
    }
    std::vector<MultiPoly> coeffs;
    bool deficient = false;
    for (unsigned i = 1; i <= uk && !deficient; ++i) {
      try {
        coeffs.push_back(interpolate_homogeneous(i, n, samples[i]));
      } catch (const InterpolationError& e) {
        if (e.kind() == InterpolationError::Kind::not_polynomial) {
          throw NotPolynomialError(i, e.residual(), samples[i][e.sample_index()].point);
        }
        deficient = true;
      }
    }
    if (!deficient) return coeffs;
    wanted += surplus;  // rank deficient by bad luck: draw more points
  }
}

std::string to_string(Verification::Status status) {
  switch (status) {
    case Verification::Status::verified: return "verified";
    case Verification::Status::residual_nonzero: return "residual_nonzero";
    case Verification::Status::witness_dependent: return "witness invalid, resample";
  }
  return "unknown";
}

Verification verify_exact(const jets::JetSequence& seq, const PolyLambda& p, const QVector& witness) {
  Verification v;
  v.result.p = p;
  v.result.witness = witness;
  const auto report = jets::check_admissible(seq, p);
  if (!report.is_admissible) {
    v.status = Verification::Status::residual_nonzero;
    const std::size_t n = seq.dim();
    for (std::size_t r = 0; r < n && v.detail.empty(); ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (report.residual(r, c).is_zero()) continue;
        v.detail = "residual entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                   ") = " + report.residual(r, c).to_string();
        break;
      }
    }
    return v;
  }
  if (!jets_independent_at(seq, witness, p.degree())) {
    v.status = Verification::Status::witness_dependent;
    v.detail = "witness invalid, resample";
    return v;
  }
  v.result.verified = true;
  return v;
}

Verification verify_sampled(const jets::JetSequence& seq, const PolyLambda& p, const QVector& witness,
                            std::uint64_t seed, std::size_t samples) {
  Verification v;
  v.result.p = p;
  v.result.witness = witness;
  v.result.seed = seed;
  v.result.samples = samples;
  const int k = p.degree();
  PointSampler sampler(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < samples; ++s) {
    const QVector x = sampler.next(seq.dim());
    QMatrix sum(seq.dim(), seq.dim());
    for (int i = 0; i <= k; ++i) {
      const Rational a = p.coefficient(static_cast<std::size_t>(i)).evaluate(x);
      if (!is_zero(a)) sum += seq.jet(k - i).evaluate(x) * a;
    }
    if (!sum.is_zero()) {
      v.status = Verification::Status::residual_nonzero;
      v.detail = "relation fails at sample " + std::to_string(s);
      return v;
    }
  }
  if (!jets_independent_at(seq, witness, k)) {
    v.status = Verification::Status::witness_dependent;
    v.detail = "witness invalid, resample";
  }
  return v;
}

std::string to_string(SolveOutcome::Status status) {
  switch (status) {
    case SolveOutcome::Status::verified: return "verified";
    case SolveOutcome::Status::rational_only: return "rational_only";
    case SolveOutcome::Status::bound_exceeded: return "bound_exceeded";
    case SolveOutcome::Status::verification_failed: return "verification_failed";
  }
  return "unknown";
}

SolveOutcome compute_min_poly(const jets::JetSequence& seq, const SolveOptions& options) {
  SolveOutcome out;
  out.degree = generic_degree(seq, options.max_k, options.seed, options.samples);
  if (out.degree.bound_exceeded) {
    out.status = SolveOutcome::Status::bound_exceeded;
    out.detail = "no dependence up to degree " + std::to_string(out.degree.max_k);
    return out;
  }
  std::vector<MultiPoly> coeffs;
  try {
    coeffs = solve_coefficients(seq, out.degree.k, options.seed);
  } catch (const NotPolynomialError& e) {
    out.status = SolveOutcome::Status::rational_only;
    out.detail = e.what();
    return out;
  }
  const PolyLambda p = PolyLambda::monic(seq.dim(), std::move(coeffs));
  Verification v = verify_exact(seq, p, out.degree.witness);
  v.result.seed = options.seed;
  v.result.samples = options.samples;
  if (!v.ok()) {
    out.status = SolveOutcome::Status::verification_failed;
    out.detail = v.detail;
    return out;
  }
  out.min_poly = std::move(v.result);
  return out;
}

}  // namespace cmpoly::minpoly
