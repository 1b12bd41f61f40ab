#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/unipoly.hpp"

namespace cmpoly {

/// Polynomial in lambda with polynomial coefficients, an element of Q[x][lambda].
///
/// coefficient(i) multiplies lambda^(degree - i), so index 0 is the leading
/// coefficient. Leading zero coefficients are trimmed; the zero element has
/// no coefficients and degree -1.
class PolyLambda {
 public:
  explicit PolyLambda(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  /// Throws UsageError if the coefficients disagree on num_vars.
  PolyLambda(std::size_t num_vars, std::vector<MultiPoly> leading_first);

  /// lambda^degree with coefficient 1.
  static PolyLambda lambda_power(std::size_t num_vars, std::size_t degree);
  /// Monic lambda^k + a1 lambda^(k-1) + ... + ak from the lower coefficients.
  static PolyLambda monic(std::size_t num_vars, std::vector<MultiPoly> lower);

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  const MultiPoly& coefficient(std::size_t i) const { return coeffs_.at(i); }
  /// Coefficient of lambda^power (zero polynomial beyond the degree).
  MultiPoly coefficient_of_power(std::size_t power) const;

  bool is_monic() const;
  /// Index i of the first coefficient that is not homogeneous of degree i,
  /// or empty when the polynomial is homogeneous in that graded sense.
  std::optional<std::size_t> first_inhomogeneous() const;

  /// Substitutes a point into every coefficient.
  UniPoly specialize(std::span<const Rational> point) const;

  PolyLambda operator-() const;
  friend PolyLambda operator+(const PolyLambda& a, const PolyLambda& b);
  friend PolyLambda operator-(const PolyLambda& a, const PolyLambda& b);
  friend PolyLambda operator*(const PolyLambda& a, const PolyLambda& b);
  friend PolyLambda operator*(const MultiPoly& s, const PolyLambda& p);
  friend bool operator==(const PolyLambda& a, const PolyLambda& b) {
    return a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "lambda^3 + (x1^2 + x2^2)*lambda".
  std::string to_string() const;

 private:
  void trim();

  std::size_t num_vars_;
  std::vector<MultiPoly> coeffs_;
};

/// Division by a monic divisor in lambda: q = quotient·p + remainder with
/// deg_lambda(remainder) < deg_lambda(p). Throws UsageError if p is not monic.
std::pair<PolyLambda, PolyLambda> polylambda_divmod(const PolyLambda& q, const PolyLambda& p);

}  // namespace cmpoly
