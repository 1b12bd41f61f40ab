#include "cmpoly/io/serialize.hpp"

#include "cmpoly/error.hpp"

namespace cmpoly::io {

using nlohmann::json;

json to_json(const Rational& r) { return cmpoly::to_string(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw UsageError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(json::array({it->first, to_json(it->second)}));
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, std::size_t num_vars) {
  if (!j.is_array()) throw UsageError("polynomial must be a term list");
  MultiPoly p(num_vars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw UsageError("malformed term " + term.dump());
    const auto exps = term[0].get<Exponents>();
    if (exps.size() != num_vars) throw UsageError("exponent vector has the wrong length");
    p.add_term(exps, rational_from_json(term[1]));
  }
  return p;
}

json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(QVector(m.row(r).begin(), m.row(r).end())));
  return out;
}

json to_json(const UniPoly& p) { return to_json(QVector(p.coefficients())); }

json to_json(const RationalFunction& f) {
  return json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

json jet_dump(const PolyMatrix& m, int order) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (m(r, c).is_zero()) continue;
      entries.push_back(json::array({r + 1, c + 1, to_json(m(r, c))}));
    }
  }
  return json{{"dim", m.dim()}, {"order", order}, {"entries", entries}};
}

PolyMatrix jet_from_json(const json& j) {
  const auto n = j.at("dim").get<std::size_t>();
  PolyMatrix m(n, n);
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r < 1 || r > n || c < 1 || c > n) throw UsageError("jet entry index out of range");
    m(r - 1, c - 1) = poly_from_json(e.at(2), n);
  }
  if (j.contains("order")) m.set_declared_degree(j.at("order").get<int>() + 2);
  return m;
}

}  // namespace cmpoly::io
