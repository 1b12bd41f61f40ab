#include "cmpoly/exactalg/bareiss.hpp"

#include <limits>
#include <utility>

#include "cmpoly/error.hpp"

namespace cmpoly {
namespace {

// Prefer short, low-degree pivots; any nonzero pivot is correct.
std::pair<std::size_t, int> pivot_cost(const MultiPoly& p) { return {p.size(), p.total_degree()}; }

}  // namespace

BareissEchelon bareiss_echelon(const PolyGrid& m, std::size_t num_vars) {
  BareissEchelon out;
  out.rows = m;
  auto& a = out.rows;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw UsageError("bareiss: ragged matrix");
    for (const auto& e : row) {
      if (e.num_vars() != num_vars) throw UsageError("bareiss: entry num_vars mismatch");
    }
  }
  MultiPoly prev = MultiPoly::constant(num_vars, Rational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::pair<std::size_t, int> best_cost{std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const auto cost = pivot_cost(a[i][c]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const MultiPoly& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly num = piv * a[i][j] - a[i][c] * a[r][j];
        if (num.is_zero()) {
          a[i][j] = std::move(num);
          continue;
        }
        auto q = exact_divide(num, prev);
        if (!q) throw ComputationError("bareiss: inexact division (internal invariant violated)");
        a[i][j] = std::move(*q);
      }
      a[i][c] = MultiPoly(num_vars);
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::vector<std::vector<RationalFunction>> bareiss_nullspace(const PolyGrid& m, std::size_t num_vars) {
  const BareissEchelon ech = bareiss_echelon(m, num_vars);
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<RationalFunction>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> v(cols, RationalFunction(num_vars));
    v[f] = RationalFunction(MultiPoly::constant(num_vars, Rational(1)));
    for (std::size_t t = ech.rank(); t-- > 0;) {
      const std::size_t pc = ech.pivot_cols[t];
      RationalFunction acc(num_vars);
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (ech.rows[t][j].is_zero() || v[j].is_zero()) continue;
        acc = acc + RationalFunction(ech.rows[t][j]) * v[j];
      }
      v[pc] = -(acc / RationalFunction(ech.rows[t][pc]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cmpoly
