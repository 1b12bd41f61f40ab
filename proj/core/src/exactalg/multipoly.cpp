#include "cmpoly/exactalg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw UsageError("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  MultiPoly p(num_vars);
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::quadratic_form(std::span<const Rational> gram, std::size_t num_vars) {
  if (gram.size() != num_vars * num_vars) throw UsageError("quadratic_form: gram size mismatch");
  MultiPoly p(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    for (std::size_t j = 0; j < num_vars; ++j) {
      const Rational& g = gram[i * num_vars + j];
      if (cmpoly::is_zero(g)) continue;
      Exponents e(num_vars, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, g);
    }
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != num_vars_) throw UsageError("exponent vector length does not match num_vars");
  if (cmpoly::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (cmpoly::is_zero(it->second)) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return static_cast<int>(degree_of(t.first)) == d;
  });
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int lo = static_cast<int>(degree_of(terms_.begin()->first));
  if (lo != total_degree()) return std::nullopt;
  return lo;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw UsageError("evaluation point has wrong length");
  // Power tables avoid recomputing x_i^e for every term.
  std::vector<std::vector<Rational>> powers(num_vars_, std::vector<Rational>{Rational(1)});
  Rational sum(0);
  Rational term;
  for (const auto& [exps, c] : terms_) {
    term = c;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      const auto e = exps[v];
      if (e == 0) continue;
      auto& table = powers[v];
      while (table.size() <= e) table.push_back(table.back() * point[v]);
      term *= table[e];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != num_vars_) throw UsageError("evaluation point has wrong length");
  double sum = 0.0;
  for (const auto& [exps, c] : terms_) {
    double term = c.get_d();
    for (std::size_t v = 0; v < num_vars_; ++v) {
      for (std::uint32_t k = 0; k < exps[v]; ++k) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= num_vars_) throw UsageError("derivative variable out of range");
  MultiPoly out(num_vars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] == 0) continue;
    Exponents e = exps;
    const Rational factor(static_cast<unsigned long>(e[var]));
    e[var] -= 1;
    out.add_term(e, c * factor);
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw UsageError("polynomials have different numbers of variables (" +
                     std::to_string(num_vars_) + " vs " + std::to_string(other.num_vars_) + ")");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (cmpoly::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = degree_of(exps) == 0;
    if (is_const || mag != 1) {
      os << cmpoly::to_string(mag);
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (v + 1);
      if (exps[v] > 1) os << "^" << exps[v];
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.num_vars(), Rational(1));
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  if (a.num_vars() != b.num_vars()) throw UsageError("exact_divide: num_vars mismatch");
  MultiPoly quotient(a.num_vars());
  MultiPoly rest = a;
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Exponents shift(a.num_vars());
  // With a single divisor and a monomial order compatible with products,
  // b | a exactly when this reduction reaches zero.
  while (!rest.is_zero()) {
    const Exponents& lr = rest.leading_exponents();
    for (std::size_t v = 0; v < shift.size(); ++v) {
      if (lr[v] < lb[v]) return std::nullopt;
      shift[v] = lr[v] - lb[v];
    }
    const Rational factor = rest.leading_coefficient() / cb;
    const MultiPoly step = MultiPoly::monomial(shift, factor);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Exponents> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(num_vars, 0);
  // Enumerate compositions of `degree` into num_vars parts recursively.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == num_vars) {
      e[var] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::size_t monomial_count(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(n+d-1, d) computed incrementally; exact at every step.
  std::size_t result = 1;
  for (unsigned k = 1; k <= degree; ++k) {
    result = result * (num_vars - 1 + k) / k;
  }
  return result;
}

}  // namespace cmpoly
