#pragma once

#include <optional>
#include <vector>

#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly {

/// Reduced row echelon form together with the pivot structure.
struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination over Q. Within each column the nonzero entry of
/// smallest bit size is chosen as pivot to limit coefficient growth.
RowEchelon row_echelon(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the right nullspace {v : m v = 0}. One vector per free column,
/// with a 1 in that column. Empty iff m has full column rank.
std::vector<QVector> q_nullspace(const QMatrix& m);

/// Solution set {particular + span(nullspace)} of m x = rhs.
struct AffineSolution {
  QVector particular;
  std::vector<QVector> nullspace;
};

/// Empty when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const QMatrix& m, const QVector& rhs);

/// Member of the affine solution set with minimal Euclidean norm, computed
/// exactly via the normal equations of the nullspace directions.
QVector least_norm_member(const AffineSolution& solution);

Rational determinant(const QMatrix& m);

/// Throws ComputationError for singular matrices.
QMatrix inverse(const QMatrix& m);

/// Exact positive-definiteness test via leading principal minors.
bool is_positive_definite(const QMatrix& m);

}  // namespace cmpoly
