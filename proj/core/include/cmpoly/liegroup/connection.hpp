#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cmpoly/liegroup/presentation.hpp"

namespace cmpoly::lie {

/// Levi-Civita connection on left-invariant fields as a bilinear map
/// alpha(X, Y) = nabla_X Y, stored by its coefficients alpha(e_i, e_j)^k.
class ConnectionMap {
 public:
  ConnectionMap(std::size_t dim, std::vector<Rational> coeffs);

  std::size_t dim() const { return dim_; }
  const Rational& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[(i * dim_ + j) * dim_ + k];
  }
  /// Nonzero (k, alpha(e_i, e_j)^k) pairs.
  const std::vector<std::pair<std::size_t, Rational>>& sparse(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }

  QVector apply(std::span<const Rational> x, std::span<const Rational> y) const;
  /// The matrix of w -> alpha(x, w).
  QMatrix operator_of(std::span<const Rational> x) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

 private:
  std::size_t dim_;
  std::vector<Rational> coeffs_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse_;
};

/// Koszul formula specialised to left-invariant fields:
/// 2<alpha(X,Y),Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
ConnectionMap koszul(const LiePresentation& pres);

}  // namespace cmpoly::lie
