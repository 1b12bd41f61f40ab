#include "cmpoly/exactalg/rational_function.hpp"

#include <algorithm>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

// Largest monomial dividing every term of p (p nonzero).
Exponents monomial_content(const MultiPoly& p) {
  Exponents m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], e[v]);
  }
  return m;
}

MultiPoly strip_monomial(const MultiPoly& p, const Exponents& m) {
  MultiPoly out(p.num_vars());
  Exponents shifted(m.size());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t v = 0; v < m.size(); ++v) shifted[v] = e[v] - m[v];
    out.add_term(shifted, c);
  }
  return out;
}

}  // namespace

RationalFunction::RationalFunction(std::size_t num_vars)
    : num_(num_vars), den_(MultiPoly::constant(num_vars, Rational(1))) {}

RationalFunction::RationalFunction(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::constant(num_.num_vars(), Rational(1))) {}

RationalFunction::RationalFunction(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw UsageError("rational function with zero denominator");
  if (num_.num_vars() != den_.num_vars()) throw UsageError("rational function: num_vars mismatch");
  reduce();
}

void RationalFunction::reduce() {
  const std::size_t n = num_.num_vars();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(n, Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(n, Rational(1));
      return;
    }
    Exponents common = monomial_content(num_);
    const Exponents dm = monomial_content(den_);
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      common[v] = std::min(common[v], dm[v]);
      any = any || common[v] > 0;
    }
    if (any) {
      num_ = strip_monomial(num_, common);
      den_ = strip_monomial(den_, common);
    }
    // A denominator factor may divide the numerator after the monomial strip.
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(n, Rational(1));
      return;
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (cmpoly::is_zero(d)) return std::nullopt;
  return Rational(num_.evaluate(point) / d);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw UsageError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cmpoly
