#pragma once

#include <vector>

#include "cmpoly/exactalg/rational_function.hpp"
#include "cmpoly/jets/jet_sequence.hpp"

namespace cmpoly::minpoly {

/// R^k + a_1 R^{k-1} + ... + a_k R^0 = 0 with rational-function coefficients.
struct RationalRelation {
  int k = 0;
  std::vector<RationalFunction> a;  ///< a_1..a_k
  bool verified = false;            ///< identity checked after clearing denominators

  bool polynomial() const;
};

/// Fraction-free elimination on the n^2 x (k+1) matrix of flattened jets.
/// Throws ComputationError when R^0..R^k are independent over the rational
/// functions, or when R^0..R^{k-1} are already dependent (k not minimal).
RationalRelation rational_relation(const jets::JetSequence& seq, int k);

}  // namespace cmpoly::minpoly
