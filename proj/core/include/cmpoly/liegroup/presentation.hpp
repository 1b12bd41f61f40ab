#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly::lie {

/// One bracket relation [e_i, e_j] = sum_k coeffs[k] e_k (0-based indices).
struct BracketRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  QVector coeffs;
};

/// A Lie algebra with structure constants and an inner product: the
/// algebraic stand-in for a Lie group with a left-invariant metric.
class LiePresentation {
 public:
  /// Validates antisymmetry, the Jacobi identity, symmetry of the metric,
  /// nondegeneracy, and (unless `positive_definite` is false, which flags an
  /// indefinite metric) positive definiteness. Throws UsageError otherwise.
  LiePresentation(std::string name, std::size_t dim, const std::vector<BracketRelation>& brackets, QMatrix metric,
                  bool positive_definite = true);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const QMatrix& metric() const { return metric_; }
  const QMatrix& metric_inverse() const { return metric_inverse_; }
  bool positive_definite() const { return positive_definite_; }

  /// Structure constant c_{ij}^k.
  const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }
  QVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  Rational inner(std::span<const Rational> x, std::span<const Rational> y) const;
  bool is_abelian() const;

  /// Bracket relations with i < j and a nonzero right-hand side.
  std::vector<BracketRelation> relations() const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<Rational> structure_;
  QMatrix metric_;
  QMatrix metric_inverse_;
  bool positive_definite_;
};

/// Standard basis vector e_i of length n.
QVector basis_vector(std::size_t n, std::size_t i);

}  // namespace cmpoly::lie
