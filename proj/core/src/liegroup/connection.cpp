#include "cmpoly/liegroup/connection.hpp"

#include "cmpoly/error.hpp"

namespace cmpoly::lie {

ConnectionMap::ConnectionMap(std::size_t dim, std::vector<Rational> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)), sparse_(dim * dim) {
  if (coeffs_.size() != dim_ * dim_ * dim_) throw UsageError("ConnectionMap: coefficient count mismatch");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = coefficient(i, j, k);
        if (!is_zero(c)) sparse_[i * dim_ + j].emplace_back(k, c);
      }
    }
  }
}

QVector ConnectionMap::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& [k, c] : sparse(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

QMatrix ConnectionMap::operator_of(std::span<const Rational> x) const {
  QMatrix a(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : sparse(i, j)) a(k, j) += x[i] * c;
    }
  }
  return a;
}

ConnectionMap koszul(const LiePresentation& pres) {
  const std::size_t n = pres.dim();
  const QMatrix& g = pres.metric();
  const QMatrix& ginv = pres.metric_inverse();
  // lowered(i,j,k) = <[e_i,e_j], e_k>
  std::vector<Rational> lowered(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s(0);
        for (std::size_t m = 0; m < n; ++m) {
          if (!is_zero(pres.structure(i, j, m))) s += pres.structure(i, j, m) * g(m, k);
        }
        lowered[(i * n + j) * n + k] = s;
      }
    }
  }
  auto low = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return lowered[(i * n + j) * n + k]; };
  std::vector<Rational> coeffs(n * n * n);
  QVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) rhs[k] = (low(i, j, k) - low(j, k, i) + low(k, i, j)) / 2;
      const QVector a = ginv.apply(rhs);
      for (std::size_t k = 0; k < n; ++k) coeffs[(i * n + j) * n + k] = a[k];
    }
  }
  return ConnectionMap(n, std::move(coeffs));
}

}  // namespace cmpoly::lie
