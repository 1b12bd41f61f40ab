#pragma once

#include <optional>
#include <span>
#include <string>

#include "cmpoly/exactalg/multipoly.hpp"

namespace cmpoly {

/// Element of the field of rational functions Q(x1..xn).
///
/// Construction performs cheap reductions only: exact division when the
/// denominator divides the numerator, removal of a common monomial factor,
/// and normalisation of the denominator's leading coefficient to 1. No full
/// multivariate GCD is attempted. Equality is decided by cross
/// multiplication, so it is exact whatever the reduction state.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t num_vars = 0);
  RationalFunction(MultiPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(MultiPoly numerator, MultiPoly denominator);

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }
  std::size_t num_vars() const { return num_.num_vars(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the reduced denominator is a constant.
  bool is_polynomial() const { return den_.is_constant(); }

  /// Empty when the denominator vanishes at the point.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  void reduce();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace cmpoly
