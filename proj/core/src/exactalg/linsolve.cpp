#include "cmpoly/exactalg/linsolve.hpp"

#include <limits>

#include "cmpoly/error.hpp"

namespace cmpoly {

RowEchelon row_echelon(QMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      const std::size_t s = bit_size(m(i, c));
      if (s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return row_echelon(m).rank(); }

std::vector<QVector> q_nullspace(const QMatrix& m) {
  const RowEchelon ech = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      v[ech.pivot_cols[r]] = -ech.reduced(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const QMatrix& m, const QVector& rhs) {
  if (rhs.size() != m.rows()) throw UsageError("solve_affine: rhs length mismatch");
  const std::size_t cols = m.cols();
  QMatrix aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = rhs[i];
  }
  const RowEchelon ech = row_echelon(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == cols) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
    sol.particular[ech.pivot_cols[r]] = ech.reduced(r, cols);
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) v[ech.pivot_cols[r]] = -ech.reduced(r, f);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

QVector least_norm_member(const AffineSolution& solution) {
  const auto& basis = solution.nullspace;
  QVector x = solution.particular;
  if (basis.empty()) return x;
  const std::size_t d = basis.size();
  // Minimise |p + N t|^2: (N^T N) t = -N^T p.
  QMatrix gram(d, d);
  QVector rhs(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Rational s(0);
      for (std::size_t i = 0; i < x.size(); ++i) s += basis[a][i] * basis[b][i];
      gram(a, b) = s;
    }
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += basis[a][i] * x[i];
    rhs[a] = -s;
  }
  const auto t = solve_affine(gram, rhs);
  if (!t) throw ComputationError("least_norm_member: singular normal equations");
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += t->particular[a] * basis[a][i];
  }
  return x;
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!is_zero(a(i, c))) {
        p = i;
        break;
      }
    }
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon ech = row_echelon(std::move(aug));
  if (ech.rank() < n || ech.pivot_cols[n - 1] != n - 1) throw ComputationError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  }
  return inv;
}

bool is_positive_definite(const QMatrix& m) {
  if (!m.is_symmetric()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(i, j);
    }
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

}  // namespace cmpoly
