#include "cmpoly/minpoly/pointwise.hpp"

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"

namespace cmpoly::minpoly {
namespace {

QVector flatten(const QMatrix& m) { return QVector(m.values().begin(), m.values().end()); }

QMatrix columns(const std::vector<QVector>& cols) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace

int default_degree_bound(std::size_t n) { return static_cast<int>(n * (n + 1) / 2); }

std::optional<PointwiseMinimal> pointwise_min_poly(const jets::JetSequence& seq, const QVector& x,
                                                   std::optional<int> max_k) {
  if (x.size() != seq.dim()) throw UsageError("direction has the wrong length");
  const int bound = max_k.value_or(default_degree_bound(seq.dim()));
  std::vector<QVector> family;
  for (int j = 0; j <= bound; ++j) {
    if (auto avail = seq.available_orders(); avail && j >= *avail) break;
    QVector v = flatten(seq.jet(j).evaluate(x));
    if (j == 0) {
      if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_zero(c); })) {
        return PointwiseMinimal{x, 0, UniPoly::monomial(0)};
      }
      family.push_back(std::move(v));
      continue;
    }
    if (auto sol = solve_affine(columns(family), v)) {
      // Independence of the family makes the solution unique.
      std::vector<Rational> ascending(static_cast<std::size_t>(j) + 1);
      for (int i = 0; i < j; ++i) ascending[static_cast<std::size_t>(i)] = -sol->particular[static_cast<std::size_t>(i)];
      ascending[static_cast<std::size_t>(j)] = 1;
      return PointwiseMinimal{x, j, UniPoly(std::move(ascending))};
    }
    family.push_back(std::move(v));
  }
  return std::nullopt;
}

bool jets_independent_at(const jets::JetSequence& seq, const QVector& x, int count) {
  if (count <= 0) return true;
  std::vector<QVector> family;
  for (int j = 0; j < count; ++j) family.push_back(flatten(seq.jet(j).evaluate(x)));
  return rank(columns(family)) == static_cast<std::size_t>(count);
}

}  // namespace cmpoly::minpoly
