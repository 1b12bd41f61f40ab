#pragma once

#include <optional>

#include "cmpoly/exactalg/unipoly.hpp"
#include "cmpoly/jets/jet_sequence.hpp"

namespace cmpoly::minpoly {

/// Minimal polynomial of the matrix family R^0(X), R^1(X), ... at one point.
struct PointwiseMinimal {
  QVector x;
  int k = 0;  ///< k(X); 0 with P = 1 when R^0(X) = 0
  UniPoly p;  ///< monic, degree k
};

/// Smallest j with R^j(X) in the span of R^0(X)..R^{j-1}(X), solved exactly.
/// The search stops after max_k (default n(n+1)/2); empty if no relation
/// appears by then.
std::optional<PointwiseMinimal> pointwise_min_poly(const jets::JetSequence& seq, const QVector& x,
                                                   std::optional<int> max_k = std::nullopt);

/// n(n+1)/2, the dimension of the space of symmetric endomorphisms.
int default_degree_bound(std::size_t n);

/// True when the flattened R^0(X)..R^{count-1}(X) are linearly independent.
bool jets_independent_at(const jets::JetSequence& seq, const QVector& x, int count);

}  // namespace cmpoly::minpoly
