#pragma once

#include <span>
#include <vector>

#include "cmpoly/exactalg/poly_matrix.hpp"
#include "cmpoly/liegroup/connection.hpp"

namespace cmpoly::lie {

/// Component arrays of R and its iterated covariant derivatives on a basis.
///
/// Level k holds D_k(W_1..W_k; Y, U, V) in R^n for every basis tuple, with
/// the k derivative slots first. Storage is dense: the slot tuple is read as
/// a base-n number (first slot most significant) and the output component
/// varies fastest, so level k has n^(k+4) entries.
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  /// Highest computed order; -1 when empty.
  int max_order() const { return static_cast<int>(levels_.size()) - 1; }
  std::span<const Rational> level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }

  /// Component `comp` of D_k at the given slot tuple (length k+3).
  const Rational& at(int k, std::span<const std::size_t> slots, std::size_t comp) const;
  QVector value(int k, std::span<const std::size_t> slots) const;

  void push_level(std::vector<Rational> values);

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Rational>> levels_;
};

/// D_0(Y,U)V = alpha(Y,alpha(U,V)) - alpha(U,alpha(Y,V)) - alpha([Y,U],V), and
/// D_{k+1}(W_0,...) = alpha(W_0, D_k(...)) - sum over slots of D_k with that
/// slot replaced by alpha(W_0, slot).
CurvatureTensor curvature_derivatives(const LiePresentation& pres, const ConnectionMap& conn, int max_order);

/// Appends levels until max_order is reached.
CurvatureTensor extend_curvature(CurvatureTensor base, const ConnectionMap& conn, int max_order);

/// R^k(X)Y = D_k(X,..,X; Y, X, X) as a matrix of homogeneous polynomials of
/// degree k+2 in the coordinates of X. Throws UsageError if k > max_order.
PolyMatrix symmetrized_jet(const CurvatureTensor& d, int k);

}  // namespace cmpoly::lie
