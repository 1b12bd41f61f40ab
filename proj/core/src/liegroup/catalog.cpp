#include "cmpoly/liegroup/catalog.hpp"

#include <cctype>

#include "cmpoly/error.hpp"

namespace cmpoly::lie {
namespace {

const Rational& require(const std::map<std::string, Rational>& params, const std::string& key,
                        std::string_view entry) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError(std::string(entry) + " requires parameter '" + key + "'");
  return it->second;
}

std::size_t positive_integer(const Rational& r, const std::string& what) {
  if (r.get_den() != 1 || sgn(r) <= 0 || r > 64) throw UsageError(what + " must be a positive integer <= 64");
  return r.get_num().get_ui();
}

std::string render(const Rational& r) { return to_string(r); }

LiePresentation abelian(const std::string& label, std::size_t n) {
  return LiePresentation(label, n, {}, QMatrix::identity(n));
}

std::vector<BracketRelation> su2_brackets() {
  return {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}};
}

LiePresentation heisenberg(std::size_t dim, const Rational& metric_scale, const std::string& label) {
  if (dim < 3 || dim % 2 == 0) throw UsageError("heisenberg dimension must be odd and >= 3");
  std::vector<BracketRelation> br;
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    QVector z(dim);
    z[dim - 1] = 1;
    br.push_back({i, i + 1, z});
  }
  return LiePresentation(label, dim, br, QMatrix::identity(dim) * metric_scale);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"flat_n", "flat_n(n)", "Euclidean space R^n: abelian algebra, identity metric", true},
      {"torus_n", "torus_n(n)", "flat torus T^n: abelian algebra, identity metric", true},
      {"su2_biinvariant", "su2_biinvariant", "S^3 = SU(2) with the bi-invariant metric, [e1,e2]=e3 cyclic", true},
      {"su2_berger", "su2_berger(t)", "Berger sphere: bi-invariant metric scaled by t^2 along e3 (t > 0)", false},
      {"heisenberg", "heisenberg(dim)", "Heisenberg group of type H, dim = 2n+1, [e_{2i-1}, e_{2i}] = z, orthonormal", false},
      {"heisenberg_scaled", "heisenberg_scaled(dim, c)", "Heisenberg group with metric multiplied by 1/c^2 (c > 0)", false},
  };
}

LiePresentation catalog(std::string_view name, const std::map<std::string, Rational>& params) {
  if (name == "flat_n" || name == "torus_n") {
    const std::size_t n = positive_integer(require(params, "n", name), "n");
    return abelian(std::string(name == "flat_n" ? "flat_" : "torus_") + std::to_string(n), n);
  }
  if (name == "su2_biinvariant") {
    return LiePresentation("su2_biinvariant", 3, su2_brackets(), QMatrix::identity(3));
  }
  if (name == "su2_berger") {
    const Rational& t = require(params, "t", name);
    if (sgn(t) <= 0) throw UsageError("su2_berger requires t > 0");
    QMatrix g = QMatrix::identity(3);
    g(2, 2) = t * t;
    return LiePresentation("su2_berger(" + render(t) + ")", 3, su2_brackets(), g);
  }
  if (name == "heisenberg") {
    const std::size_t dim = positive_integer(require(params, "dim", name), "dim");
    return heisenberg(dim, Rational(1), "heisenberg(" + std::to_string(dim) + ")");
  }
  if (name == "heisenberg_scaled") {
    const std::size_t dim = positive_integer(require(params, "dim", name), "dim");
    const Rational& c = require(params, "c", name);
    if (sgn(c) <= 0) throw UsageError("heisenberg_scaled requires c > 0");
    return heisenberg(dim, 1 / (c * c), "heisenberg_scaled(" + std::to_string(dim) + "," + render(c) + ")");
  }
  throw UsageError("unknown catalog entry '" + std::string(name) + "'");
}

LiePresentation catalog_from_spec(std::string_view spec) {
  std::string s;
  for (char ch : spec) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::string base = s;
  std::vector<Rational> args;
  if (const auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw UsageError("malformed space name '" + std::string(spec) + "'");
    base = s.substr(0, open);
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
      const auto comma = inner.find(',', start);
      args.push_back(parse_rational(inner.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    // Trailing digits as an argument: heisenberg3, flat_3, torus_4.
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    if (cut < s.size() && cut > 0) {
      args.push_back(parse_rational(s.substr(cut)));
      base = s.substr(0, cut);
      if (base.back() == '_' && base != "flat_" && base != "torus_") base.pop_back();
    }
  }
  if (base == "flat" || base == "flat_" || base == "flat_n") base = "flat_n";
  if (base == "torus" || base == "torus_" || base == "torus_n") base = "torus_n";
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw UsageError("'" + base + "' takes " + std::to_string(count) + " argument(s), got " +
                       std::to_string(args.size()));
    }
  };
  std::map<std::string, Rational> params;
  if (base == "flat_n" || base == "torus_n") {
    expect(1);
    params["n"] = args[0];
  } else if (base == "su2_biinvariant") {
    expect(0);
  } else if (base == "su2_berger") {
    expect(1);
    params["t"] = args[0];
  } else if (base == "heisenberg") {
    expect(1);
    params["dim"] = args[0];
  } else if (base == "heisenberg_scaled") {
    expect(2);
    params["dim"] = args[0];
    params["c"] = args[1];
  }
  return catalog(base, params);
}

}  // namespace cmpoly::lie
