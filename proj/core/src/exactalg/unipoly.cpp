#include "cmpoly/exactalg/unipoly.hpp"

#include <sstream>

#include "cmpoly/error.hpp"

namespace cmpoly {

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && cmpoly::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw UsageError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return {};
  const Rational inv = 1 / leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= inv;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (cmpoly::is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << cmpoly::to_string(mag);
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> unipoly_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + db] * inv_lead;
    quot[k] = f;
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = unipoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

int sign_at(const UniPoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

// Sign of p(x) as x -> +inf (positive = true) or -inf.
int sign_at_infinity(const UniPoly& p, bool positive) {
  const int s = sgn(p.leading());
  if (positive || p.degree() % 2 == 0) return s;
  return -s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

RootProfile sturm_root_profile(const UniPoly& q, RootRegion region) {
  if (q.is_zero()) throw UsageError("sturm_root_profile of the zero polynomial");
  RootProfile out;
  const UniPoly g = gcd(q, q.derivative());
  out.all_simple = g.degree() <= 0;
  // Square-free part has the same distinct roots; strip a root at 0 so that
  // 0 is never a root when the chain is sampled there.
  UniPoly p = unipoly_divmod(q, g).first;
  if (is_zero(p.coefficient(0))) p = unipoly_divmod(p, UniPoly::monomial(1)).first;
  const bool zero_root = is_zero(q.coefficient(0));
  if (p.degree() <= 0) {
    out.distinct_real_roots = (region == RootRegion::all_reals && zero_root) ? 1 : 0;
    return out;
  }

  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = unipoly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  auto count = [&](auto&& sign_fn) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& c : chain) s.push_back(sign_fn(c));
    return variations(s);
  };
  const std::size_t v_minus = count([](const UniPoly& c) { return sign_at_infinity(c, false); });
  const std::size_t v_plus = count([](const UniPoly& c) { return sign_at_infinity(c, true); });
  const std::size_t v_zero = count([](const UniPoly& c) { return sign_at(c, Rational(0)); });
  switch (region) {
    case RootRegion::all_reals:
      out.distinct_real_roots = v_minus - v_plus + (zero_root ? 1 : 0);
      break;
    case RootRegion::negatives:
      out.distinct_real_roots = v_minus - v_zero;
      break;
    case RootRegion::positives:
      out.distinct_real_roots = v_zero - v_plus;
      break;
  }
  return out;
}

}  // namespace cmpoly
