#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmpoly/exactalg/rational.hpp"

namespace cmpoly {

/// Univariate polynomial over Q, coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly monomial(std::size_t degree, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q·b + r with deg r < deg b. Throws UsageError if b = 0.
std::pair<UniPoly, UniPoly> unipoly_divmod(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

enum class RootRegion { all_reals, negatives, positives };

struct RootProfile {
  std::size_t distinct_real_roots = 0;
  bool all_simple = false;
};

/// Counts distinct real roots of q in the region (negatives and positives
/// exclude 0) with a Sturm chain; all_simple iff gcd(q, q') is constant.
/// Throws UsageError for q = 0.
RootProfile sturm_root_profile(const UniPoly& q, RootRegion region);

}  // namespace cmpoly
