#include "cmpoly/io/space_file.hpp"

#include <fstream>

#include "cmpoly/error.hpp"
#include "cmpoly/io/serialize.hpp"
#include "cmpoly/liegroup/catalog.hpp"

namespace cmpoly::io {

using nlohmann::json;

lie::LiePresentation parse_space(const json& doc) {
  try {
    const auto name = doc.value("name", std::string("unnamed"));
    const auto n = doc.at("dim").get<std::size_t>();
    if (n == 0) throw UsageError("dim must be positive");
    std::vector<lie::BracketRelation> brackets;
    for (const auto& b : doc.value("brackets", json::array())) {
      const auto i = b.at(0).get<std::size_t>();
      const auto j = b.at(1).get<std::size_t>();
      if (i < 1 || i > n || j < 1 || j > n) throw UsageError("bracket index out of range in " + b.dump());
      QVector coeffs;
      for (const auto& c : b.at(2)) coeffs.push_back(rational_from_json(c));
      if (coeffs.size() != n) throw UsageError("bracket " + b.dump() + " needs " + std::to_string(n) + " coefficients");
      brackets.push_back({i - 1, j - 1, std::move(coeffs)});
    }
    QMatrix metric = QMatrix::identity(n);
    if (doc.contains("metric")) {
      const auto& rows = doc.at("metric");
      if (rows.size() != n) throw UsageError("metric needs " + std::to_string(n) + " rows");
      for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) throw UsageError("metric row " + std::to_string(r + 1) + " has the wrong length");
        for (std::size_t c = 0; c < n; ++c) metric(r, c) = rational_from_json(rows[r][c]);
      }
    }
    const bool pd = doc.value("positive_definite", true);
    return lie::LiePresentation(name, n, brackets, std::move(metric), pd);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed space description: ") + e.what());
  }
}

json space_to_json(const lie::LiePresentation& pres) {
  json brackets = json::array();
  for (const auto& rel : pres.relations()) brackets.push_back(json::array({rel.i + 1, rel.j + 1, to_json(rel.coeffs)}));
  return json{{"name", pres.name()},
              {"dim", pres.dim()},
              {"brackets", brackets},
              {"metric", to_json(pres.metric())},
              {"positive_definite", pres.positive_definite()}};
}

lie::LiePresentation load_space_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open space file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError("space file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_space(doc);
}

lie::LiePresentation load_space(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return load_space_file(spec);
  return lie::catalog_from_spec(spec);
}

}  // namespace cmpoly::io
