#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly {

struct Sample {
  QVector point;
  Rational value;
};

/// Failure of homogeneous interpolation. `residual` is the first nonzero
/// misfit (value minus fitted value) and `sample_index` the sample it
/// belongs to; both are only meaningful for Kind::not_polynomial.
class InterpolationError : public std::runtime_error {
 public:
  enum class Kind { insufficient_samples, not_polynomial };

  InterpolationError(Kind kind, const std::string& what, Rational residual = 0, std::size_t sample_index = 0)
      : std::runtime_error(what), kind_(kind), residual_(std::move(residual)), sample_index_(sample_index) {}

  Kind kind() const { return kind_; }
  const Rational& residual() const { return residual_; }
  std::size_t sample_index() const { return sample_index_; }

 private:
  Kind kind_;
  Rational residual_;
  std::size_t sample_index_;
};

/// Unique homogeneous polynomial of the given degree in num_vars variables
/// through all samples, fitted in the monomial basis.
///
/// Throws InterpolationError(insufficient_samples) when the monomial matrix
/// is rank deficient, and InterpolationError(not_polynomial) when the
/// samples do not lie on any such polynomial.
MultiPoly interpolate_homogeneous(unsigned degree, std::size_t num_vars, const std::vector<Sample>& samples);

}  // namespace cmpoly
