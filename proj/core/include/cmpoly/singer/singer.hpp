#pragma once

#include <optional>
#include <vector>

#include "cmpoly/exactalg/qmatrix.hpp"
#include "cmpoly/liegroup/curvature.hpp"

namespace cmpoly::singer {

/// (A.T)(Y_1..Y_s) = A T(Y_1..Y_s) - sum_i T(.., A Y_i, ..) on level j of D,
/// returned in the same layout as D.level(j). Throws UsageError unless A is
/// skew with respect to the metric.
std::vector<Rational> tensor_action(const QMatrix& a, const lie::CurvatureTensor& d, int level,
                                    const QMatrix& metric);

/// True when A annihilates levels 0..j of D.
bool annihilates(const QMatrix& a, const lie::CurvatureTensor& d, int j);

/// Basis of g(j) = {A skew : A.D_i = 0 for i <= j}. j = -1 gives the whole
/// skew algebra.
std::vector<QMatrix> stabilizer_algebra(const lie::CurvatureTensor& d, int j, const QMatrix& metric);

/// The chain g(-1) ⊇ g(0) ⊇ ... ⊇ g(max_level), computed level by level
/// inside the previous algebra. chain[0] is g(-1).
std::vector<std::vector<QMatrix>> stabilizer_chain(const lie::CurvatureTensor& d, int max_level,
                                                   const QMatrix& metric);

/// Commutators of basis pairs stay in the algebra.
bool is_lie_subalgebra(const std::vector<QMatrix>& basis, const lie::CurvatureTensor& d, int j);

struct SingerReport {
  std::vector<std::size_t> dims;  ///< dims[j] = dim g(j), j = 0..k+1
  std::optional<int> k_singer;    ///< first j <= k with g(j) = g(j+1)
  int k = 0;
  bool nested = false;            ///< g(j+1) ⊆ g(j) checked on basis vectors
  bool bound_holds = false;
};

/// Requires D computed to order k+1.
SingerReport singer_invariant(const lie::CurvatureTensor& d, int k, const QMatrix& metric);

}  // namespace cmpoly::singer
