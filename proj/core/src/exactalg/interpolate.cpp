#include "cmpoly/exactalg/interpolate.hpp"

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"

namespace cmpoly {

MultiPoly interpolate_homogeneous(unsigned degree, std::size_t num_vars, const std::vector<Sample>& samples) {
  const auto monomials = monomials_of_degree(num_vars, degree);
  const std::size_t unknowns = monomials.size();
  if (samples.size() < unknowns) {
    throw InterpolationError(InterpolationError::Kind::insufficient_samples,
                             "insufficient samples: need " + std::to_string(unknowns) + ", got " +
                                 std::to_string(samples.size()));
  }
  QMatrix design(samples.size(), unknowns);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (samples[s].point.size() != num_vars) throw UsageError("interpolation sample has wrong dimension");
    for (std::size_t m = 0; m < unknowns; ++m) {
      design(s, m) = MultiPoly::monomial(monomials[m], Rational(1)).evaluate(samples[s].point);
    }
  }
  // Independent sample rows are the pivot columns of the transpose.
  const RowEchelon rows = row_echelon(design.transpose());
  if (rows.rank() < unknowns) {
    throw InterpolationError(InterpolationError::Kind::insufficient_samples,
                             "insufficient samples: monomial matrix has rank " + std::to_string(rows.rank()) +
                                 " < " + std::to_string(unknowns));
  }
  QMatrix square(unknowns, unknowns);
  QVector rhs(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) {
    const std::size_t s = rows.pivot_cols[r];
    for (std::size_t m = 0; m < unknowns; ++m) square(r, m) = design(s, m);
    rhs[r] = samples[s].value;
  }
  const auto sol = solve_affine(square, rhs);
  if (!sol || !sol->nullspace.empty()) throw ComputationError("interpolation: square system unexpectedly singular");
  const QVector fitted = design.apply(sol->particular);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Rational misfit = samples[s].value - fitted[s];
    if (!is_zero(misfit)) {
      throw InterpolationError(InterpolationError::Kind::not_polynomial,
                               "not polynomial of degree " + std::to_string(degree) + ": sample " +
                                   std::to_string(s) + " misses the fit by " + to_string(misfit),
                               misfit, s);
    }
  }
  MultiPoly out(num_vars);
  for (std::size_t m = 0; m < unknowns; ++m) out.add_term(monomials[m], sol->particular[m]);
  return out;
}

}  // namespace cmpoly
