#pragma once

#include "cmpoly/jets/jet_sequence.hpp"

namespace cmpoly::minpoly {

struct C0Witness {
  bool feasible = false;
  QVector x;
  QMatrix c;  ///< G-skew, [C, R^i(X)] = R^{i+1}(X) for i < orders_satisfied
  int orders_satisfied = 0;
  std::size_t solution_dimension = 0;  ///< dimension of the affine solution set
};

/// Solves [C, R^i(X)] = R^{i+1}(X), i = 0..orders-1, over G-skew C = G^{-1}S.
/// Among all solutions the one whose coordinates in the basis
/// G^{-1}(E_ij - E_ji), i < j, have least Euclidean norm is returned.
C0Witness c0_witness(const jets::JetSequence& seq, const QVector& x, int orders);

/// Number of consecutive i >= 0 with [C, R^i(X)] = R^{i+1}(X), up to max_orders.
int commutator_orders(const jets::JetSequence& seq, const QVector& x, const QMatrix& c, int max_orders);

/// G^{-1}(E_ij - E_ji) for i < j in lexicographic order.
std::vector<QMatrix> skew_basis(const QMatrix& metric);

bool is_metric_skew(const QMatrix& metric, const QMatrix& a);

}  // namespace cmpoly::minpoly
