#include "cmpoly/exactalg/poly_lambda.hpp"

#include <sstream>

#include "cmpoly/error.hpp"

namespace cmpoly {

PolyLambda::PolyLambda(std::size_t num_vars, std::vector<MultiPoly> leading_first)
    : num_vars_(num_vars), coeffs_(std::move(leading_first)) {
  for (const auto& c : coeffs_) {
    if (c.num_vars() != num_vars_) throw UsageError("PolyLambda coefficient has wrong num_vars");
  }
  trim();
}

PolyLambda PolyLambda::lambda_power(std::size_t num_vars, std::size_t degree) {
  std::vector<MultiPoly> c(degree + 1, MultiPoly(num_vars));
  c[0] = MultiPoly::constant(num_vars, Rational(1));
  return PolyLambda(num_vars, std::move(c));
}

PolyLambda PolyLambda::monic(std::size_t num_vars, std::vector<MultiPoly> lower) {
  std::vector<MultiPoly> c;
  c.reserve(lower.size() + 1);
  c.push_back(MultiPoly::constant(num_vars, Rational(1)));
  for (auto& a : lower) c.push_back(std::move(a));
  return PolyLambda(num_vars, std::move(c));
}

void PolyLambda::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
}

MultiPoly PolyLambda::coefficient_of_power(std::size_t power) const {
  const int k = degree();
  if (static_cast<int>(power) > k) return MultiPoly(num_vars_);
  return coeffs_[static_cast<std::size_t>(k) - power];
}

bool PolyLambda::is_monic() const {
  return !coeffs_.empty() && coeffs_[0] == MultiPoly::constant(num_vars_, Rational(1));
}

std::optional<std::size_t> PolyLambda::first_inhomogeneous() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_homogeneous(static_cast<int>(i))) return i;
  }
  return std::nullopt;
}

UniPoly PolyLambda::specialize(std::span<const Rational> point) const {
  std::vector<Rational> asc(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) asc[coeffs_.size() - 1 - i] = coeffs_[i].evaluate(point);
  return UniPoly(std::move(asc));
}

PolyLambda PolyLambda::operator-() const {
  std::vector<MultiPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(-a);
  return PolyLambda(num_vars_, std::move(c));
}

PolyLambda operator+(const PolyLambda& a, const PolyLambda& b) {
  if (a.num_vars_ != b.num_vars_) throw UsageError("PolyLambda +: num_vars mismatch");
  const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<MultiPoly> c(len, MultiPoly(a.num_vars_));
  // Align by power of lambda: position from the end.
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[len - a.coeffs_.size() + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[len - b.coeffs_.size() + i] += b.coeffs_[i];
  return PolyLambda(a.num_vars_, std::move(c));
}

PolyLambda operator-(const PolyLambda& a, const PolyLambda& b) { return a + (-b); }

PolyLambda operator*(const PolyLambda& a, const PolyLambda& b) {
  if (a.num_vars_ != b.num_vars_) throw UsageError("PolyLambda *: num_vars mismatch");
  if (a.is_zero() || b.is_zero()) return PolyLambda(a.num_vars_);
  std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.num_vars_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyLambda(a.num_vars_, std::move(c));
}

PolyLambda operator*(const MultiPoly& s, const PolyLambda& p) {
  std::vector<MultiPoly> c;
  c.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) c.push_back(s * a);
  return PolyLambda(p.num_vars_, std::move(c));
}

std::string PolyLambda::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  const int k = degree();
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const MultiPoly& a = coeffs_[i];
    if (a.is_zero()) continue;
    const int power = k - static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    const bool unit = a == MultiPoly::constant(num_vars_, Rational(1));
    if (power == 0) {
      os << (a.size() > 1 ? "(" + a.to_string() + ")" : a.to_string());
      continue;
    }
    if (!unit) os << (a.size() > 1 ? "(" + a.to_string() + ")" : a.to_string()) << "*";
    os << "lambda";
    if (power > 1) os << "^" << power;
  }
  return os.str();
}

std::pair<PolyLambda, PolyLambda> polylambda_divmod(const PolyLambda& q, const PolyLambda& p) {
  if (!p.is_monic()) throw UsageError("polylambda_divmod: divisor is not monic in lambda");
  if (q.num_vars() != p.num_vars()) throw UsageError("polylambda_divmod: num_vars mismatch");
  const std::size_t n = q.num_vars();
  const int dq = q.degree();
  const int dp = p.degree();
  if (dq < dp) return {PolyLambda(n), q};
  std::vector<MultiPoly> rem = q.coefficients();
  const auto& pc = p.coefficients();
  std::vector<MultiPoly> quot(static_cast<std::size_t>(dq - dp + 1), MultiPoly(n));
  for (std::size_t i = 0; i < quot.size(); ++i) {
    const MultiPoly f = rem[i];
    quot[i] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < pc.size(); ++j) {
      if (!pc[j].is_zero()) rem[i + j] -= f * pc[j];
    }
  }
  rem.erase(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(quot.size()));
  return {PolyLambda(n, std::move(quot)), PolyLambda(n, std::move(rem))};
}

}  // namespace cmpoly
