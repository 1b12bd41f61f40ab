#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmpoly/exactalg/poly_matrix.hpp"
#include "cmpoly/exactalg/qmatrix.hpp"
#include "cmpoly/liegroup/connection.hpp"
#include "cmpoly/liegroup/curvature.hpp"
#include "cmpoly/liegroup/presentation.hpp"

namespace cmpoly::jets {

/// Jets generated by a commutator recursion R^{k+1}(X) = [C(X), R^k(X)].
/// C must be linear in X.
struct C0Generator {
  PolyMatrix r0;  ///< degree 2
  PolyMatrix c;   ///< degree 1
  bool skew_checked = true;
};

/// The sequence R^0, R^1, ... of symmetrized jets at a point, together with
/// the Gram matrix of the metric.
///
/// Copies share one memo cache. Each order is computed once under a lock;
/// returned references stay valid for the lifetime of any copy.
class JetSequence {
 public:
  enum class Source { explicit_list, lie_group, c0_generator };

  /// Jets given directly; jets[k] must be homogeneous of degree k+2.
  static JetSequence from_list(std::string name, QMatrix metric, std::vector<PolyMatrix> jets,
                               bool positive_definite = true);
  /// Jets computed from bracket data, extended on demand.
  static JetSequence from_lie(const lie::LiePresentation& pres);
  /// Throws UsageError if C is not metric-skew and skew_checked is set.
  static JetSequence from_generator(std::string name, QMatrix metric, C0Generator gen,
                                    bool positive_definite = true);

  const std::string& name() const;
  std::size_t dim() const;
  const QMatrix& metric() const;
  bool positive_definite() const;
  Source source() const;
  /// Number of available orders for explicit lists; empty when unbounded.
  std::optional<int> available_orders() const;

  /// R^k. Throws UsageError("jet order unavailable") past an explicit list.
  const PolyMatrix& jet(int k) const;

  /// Present for Lie-backed sequences only.
  const lie::LiePresentation* presentation() const;
  const lie::ConnectionMap* connection() const;
  /// Curvature components up to at least `order` (Lie-backed only). The
  /// returned snapshot is never modified afterwards.
  std::shared_ptr<const lie::CurvatureTensor> curvature(int order) const;

 private:
  struct State;
  explicit JetSequence(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

const PolyMatrix& get_jet(const JetSequence& seq, int k);

}  // namespace cmpoly::jets
