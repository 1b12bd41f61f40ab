#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/qmatrix.hpp"

namespace cmpoly {

/// Square matrix of polynomials: an End(V)-valued polynomial map on V.
///
/// When a degree is declared, every nonzero entry must be homogeneous of
/// exactly that degree; the constructor and set_declared_degree enforce it.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t dim, std::size_t num_vars);

  /// Constant matrix embedded as degree-0 polynomials.
  static PolyMatrix constant(const QMatrix& m, std::size_t num_vars);

  std::size_t dim() const { return dim_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::optional<int>& declared_degree() const { return declared_degree_; }
  /// Throws UsageError if some entry is not homogeneous of degree d.
  void set_declared_degree(int d);

  MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  std::span<const MultiPoly> entries() const { return entries_; }

  bool is_zero() const;
  /// True iff every entry is homogeneous of degree d.
  bool entries_homogeneous(int d) const;
  PolyMatrix transpose() const;
  MultiPoly trace() const;

  QMatrix evaluate(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;

  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  PolyMatrix& operator*=(const MultiPoly& scalar);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(PolyMatrix a, const MultiPoly& s) { return a *= s; }
  friend PolyMatrix operator*(const MultiPoly& s, PolyMatrix a) { return a *= s; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void check_shape(const PolyMatrix& other) const;

  std::size_t dim_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<MultiPoly> entries_;
  std::optional<int> declared_degree_;
};

/// a·b − b·a; declared degrees add when both are set.
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace cmpoly
