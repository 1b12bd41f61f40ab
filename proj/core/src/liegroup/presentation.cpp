#include "cmpoly/liegroup/presentation.hpp"

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"

namespace cmpoly::lie {

QVector basis_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v.at(i) = 1;
  return v;
}

LiePresentation::LiePresentation(std::string name, std::size_t dim, const std::vector<BracketRelation>& brackets,
                                 QMatrix metric, bool positive_definite)
    : name_(std::move(name)),
      dim_(dim),
      structure_(dim * dim * dim),
      metric_(std::move(metric)),
      positive_definite_(positive_definite) {
  if (dim_ == 0) throw UsageError("Lie algebra must have positive dimension");
  if (metric_.rows() != dim_ || metric_.cols() != dim_) throw UsageError("metric must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
  std::vector<bool> seen(dim_ * dim_, false);
  for (const auto& b : brackets) {
    if (b.i >= dim_ || b.j >= dim_) throw UsageError("bracket index out of range");
    if (b.coeffs.size() != dim_) throw UsageError("bracket coefficient vector must have length dim");
    if (b.i == b.j) {
      for (const auto& c : b.coeffs) {
        if (!is_zero(c)) throw UsageError("[e_i, e_i] must vanish");
      }
      continue;
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      Rational& ij = structure_[(b.i * dim_ + b.j) * dim_ + k];
      Rational& ji = structure_[(b.j * dim_ + b.i) * dim_ + k];
      if (seen[b.i * dim_ + b.j] && ij != b.coeffs[k]) {
        throw UsageError("inconsistent bracket data for [e" + std::to_string(b.i + 1) + ", e" +
                         std::to_string(b.j + 1) + "] (antisymmetry violated)");
      }
      ij = b.coeffs[k];
      ji = -b.coeffs[k];
    }
    seen[b.i * dim_ + b.j] = true;
    seen[b.j * dim_ + b.i] = true;
  }
  // Jacobi: [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]] = 0.
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t l = j + 1; l < dim_; ++l) {
        for (std::size_t m = 0; m < dim_; ++m) {
          Rational s(0);
          for (std::size_t k = 0; k < dim_; ++k) {
            s += structure(j, l, k) * structure(i, k, m);
            s += structure(l, i, k) * structure(j, k, m);
            s += structure(i, j, k) * structure(l, k, m);
          }
          if (!is_zero(s)) {
            throw UsageError("Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                             ", e" + std::to_string(l + 1) + ")");
          }
        }
      }
    }
  }
  if (!metric_.is_symmetric()) throw UsageError("metric is not symmetric");
  if (is_zero(determinant(metric_))) throw UsageError("degenerate metric");
  if (positive_definite_ && !is_positive_definite(metric_)) {
    throw UsageError("metric is not positive definite (flag the presentation as indefinite to allow this)");
  }
  metric_inverse_ = inverse(metric_);
}

QVector LiePresentation::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  QVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(y[j]) || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = structure(i, j, k);
        if (!is_zero(c)) out[k] += xy * c;
      }
    }
  }
  return out;
}

Rational LiePresentation::inner(std::span<const Rational> x, std::span<const Rational> y) const {
  Rational s(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!is_zero(metric_(i, j)) && !is_zero(y[j])) s += x[i] * metric_(i, j) * y[j];
    }
  }
  return s;
}

bool LiePresentation::is_abelian() const {
  for (const auto& c : structure_) {
    if (!is_zero(c)) return false;
  }
  return true;
}

std::vector<BracketRelation> LiePresentation::relations() const {
  std::vector<BracketRelation> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketRelation r{i, j, QVector(dim_)};
      bool nonzero = false;
      for (std::size_t k = 0; k < dim_; ++k) {
        r.coeffs[k] = structure(i, j, k);
        nonzero = nonzero || !is_zero(r.coeffs[k]);
      }
      if (nonzero) out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace cmpoly::lie
