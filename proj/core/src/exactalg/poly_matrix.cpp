#include "cmpoly/exactalg/poly_matrix.hpp"

#include <algorithm>

#include "cmpoly/error.hpp"

namespace cmpoly {

PolyMatrix::PolyMatrix(std::size_t dim, std::size_t num_vars)
    : dim_(dim), num_vars_(num_vars), entries_(dim * dim, MultiPoly(num_vars)) {}

PolyMatrix PolyMatrix::constant(const QMatrix& m, std::size_t num_vars) {
  if (!m.is_square()) throw UsageError("PolyMatrix::constant: matrix is not square");
  PolyMatrix out(m.rows(), num_vars);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly::constant(num_vars, m(i, j));
  }
  return out;
}

void PolyMatrix::set_declared_degree(int d) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_homogeneous(d)) {
      throw UsageError("entry (" + std::to_string(i / dim_ + 1) + "," + std::to_string(i % dim_ + 1) +
                       ") is not homogeneous of degree " + std::to_string(d));
    }
  }
  declared_degree_ = d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::entries_homogeneous(int d) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [d](const MultiPoly& p) { return p.is_homogeneous(d); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(dim_, num_vars_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  t.declared_degree_ = declared_degree_;
  return t;
}

MultiPoly PolyMatrix::trace() const {
  MultiPoly t(num_vars_);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

QMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).evaluate(point);
  }
  return m;
}

std::vector<double> PolyMatrix::evaluate(std::span<const double> point) const {
  std::vector<double> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].evaluate(point);
  return out;
}

void PolyMatrix::check_shape(const PolyMatrix& other) const {
  if (dim_ != other.dim_ || num_vars_ != other.num_vars_) throw UsageError("PolyMatrix shape mismatch");
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  check_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  if (declared_degree_ != other.declared_degree_) declared_degree_.reset();
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  check_shape(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  if (declared_degree_ != other.declared_degree_) declared_degree_.reset();
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const MultiPoly& scalar) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e *= scalar;
  }
  const auto sd = scalar.homogeneous_degree();
  if (declared_degree_ && sd) {
    declared_degree_ = *declared_degree_ + *sd;
  } else {
    declared_degree_.reset();
  }
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  a.check_shape(b);
  const std::size_t n = a.dim_;
  PolyMatrix out(n, a.num_vars_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const MultiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  if (a.declared_degree_ && b.declared_degree_) {
    out.declared_degree_ = *a.declared_degree_ + *b.declared_degree_;
  }
  return out;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

}  // namespace cmpoly
