#pragma once

#include <nlohmann/json.hpp>

#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/poly_lambda.hpp"
#include "cmpoly/exactalg/poly_matrix.hpp"
#include "cmpoly/exactalg/qmatrix.hpp"
#include "cmpoly/exactalg/rational_function.hpp"
#include "cmpoly/exactalg/unipoly.hpp"

namespace cmpoly::io {

/// Rationals travel as "p/q" strings.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// Term list [[[e1, ..., en], "p/q"], ...], leading term first.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, std::size_t num_vars);

nlohmann::json to_json(const QVector& v);
nlohmann::json to_json(const QMatrix& m);
nlohmann::json to_json(const UniPoly& p);  ///< ascending coefficients
nlohmann::json to_json(const RationalFunction& f);

/// Jet dump {"dim", "order", "entries": [[row, col, terms], ...]}, 1-based,
/// zero entries omitted.
nlohmann::json jet_dump(const PolyMatrix& m, int order);
PolyMatrix jet_from_json(const nlohmann::json& j);

}  // namespace cmpoly::io
