#pragma once

#include <vector>

#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/rational_function.hpp"

namespace cmpoly {

/// Row-major matrix with polynomial entries.
using PolyGrid = std::vector<std::vector<MultiPoly>>;

/// Fraction-free upper echelon form of a polynomial matrix.
struct BareissEchelon {
  PolyGrid rows;                        ///< echelon rows; only the first rank() are nonzero
  std::vector<std::size_t> pivot_cols;  ///< pivot column of each echelon row
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Bareiss elimination. Each intermediate entry is a minor of the input, so
/// the division by the previous pivot is exact and entries stay polynomial.
BareissEchelon bareiss_echelon(const PolyGrid& m, std::size_t num_vars);

/// Basis of the right nullspace over Q(x1..xn): one vector per free column,
/// carrying 1 in that column. Empty iff the generic rank equals the column count.
std::vector<std::vector<RationalFunction>> bareiss_nullspace(const PolyGrid& m, std::size_t num_vars);

}  // namespace cmpoly
