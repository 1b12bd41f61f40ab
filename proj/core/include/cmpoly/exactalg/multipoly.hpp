#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmpoly/exactalg/rational.hpp"

namespace cmpoly {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... . Ascending, so the leading term is the last map entry.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// No zero coefficients are ever stored; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  /// The coordinate function x_{index+1}.
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(Exponents exps, const Rational& c);
  /// Quadratic form x^T G x.
  static MultiPoly quadratic_form(std::span<const Rational> gram, std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c·x^exps to this polynomial (erasing the term if it cancels).
  void add_term(const Exponents& exps, const Rational& c);
  Rational coefficient(const Exponents& exps) const;

  /// Highest total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// True when every term has total degree d (the zero polynomial qualifies).
  bool is_homogeneous(int d) const;
  /// The common degree of all terms, if there is one. Empty for zero.
  std::optional<int> homogeneous_degree() const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  MultiPoly derivative(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Canonical rendering, leading term first: "x1^2 + 2/3*x1*x2 - x3".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Returns a / b when b divides a exactly in Q[x], empty otherwise.
/// Throws UsageError when b is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// All exponent vectors of total degree d in n variables, in graded-lex order.
std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Number of monomials of degree d in n variables, C(n+d-1, d).
std::size_t monomial_count(std::size_t num_vars, unsigned degree);

}  // namespace cmpoly
