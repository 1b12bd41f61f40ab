#include "cmpoly/minpoly/rational_relation.hpp"

#include <algorithm>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/bareiss.hpp"

namespace cmpoly::minpoly {

bool RationalRelation::polynomial() const {
  return std::all_of(a.begin(), a.end(), [](const RationalFunction& f) { return f.is_polynomial(); });
}

RationalRelation rational_relation(const jets::JetSequence& seq, int k) {
  if (k < 1) throw UsageError("rational_relation needs k >= 1");
  const std::size_t n = seq.dim();
  const auto cols = static_cast<std::size_t>(k) + 1;
  PolyGrid grid(n * n, std::vector<MultiPoly>(cols, MultiPoly(n)));
  for (std::size_t j = 0; j < cols; ++j) {
    const PolyMatrix& r = seq.jet(static_cast<int>(j));
    for (std::size_t e = 0; e < n * n; ++e) grid[e][j] = r.entries()[e];
  }
  const auto basis = bareiss_nullspace(grid, n);
  if (basis.empty()) throw ComputationError("jets up to order " + std::to_string(k) + " are independent");
  if (basis.size() > 1) throw ComputationError("jets below order " + std::to_string(k) + " are already dependent");
  const auto& v = basis.front();
  if (v.back().is_zero()) throw ComputationError("jets below order " + std::to_string(k) + " are already dependent");

  RationalRelation rel;
  rel.k = k;
  const RationalFunction lead = v.back();
  for (int i = 1; i <= k; ++i) rel.a.push_back(v[static_cast<std::size_t>(k - i)] / lead);

  // Entrywise: R^k + sum a_i R^{k-i}, equality decided by cross multiplication.
  rel.verified = true;
  for (std::size_t e = 0; e < n * n && rel.verified; ++e) {
    RationalFunction sum(grid[e][cols - 1]);
    for (int i = 1; i <= k; ++i) sum = sum + rel.a[static_cast<std::size_t>(i - 1)] * RationalFunction(grid[e][static_cast<std::size_t>(k - i)]);
    rel.verified = sum.is_zero();
  }
  return rel;
}

}  // namespace cmpoly::minpoly
