#pragma once

#include <vector>

#include "cmpoly/liegroup/connection.hpp"
#include "cmpoly/liegroup/presentation.hpp"

namespace cmpoly::dynamics {

/// Row-major n x n matrix of doubles.
using Matrix = std::vector<double>;

struct TrajectoryState {
  double t = 0.0;
  std::vector<double> v;  ///< left-trivialized velocity
  Matrix phi;             ///< left-trivialized parallel transport from 0 to t
};

/// The Euler-Arnold flow V' = -alpha(V, V) together with the transport
/// equation Phi' = -A(V) Phi, A(V)w = alpha(V, w), integrated with RK4.
class GeodesicFlow {
 public:
  GeodesicFlow(const lie::LiePresentation& pres, const lie::ConnectionMap& conn, std::vector<double> x0,
               double h_max);

  std::size_t dim() const { return n_; }
  const std::vector<double>& x0() const { return x0_; }
  double h_max() const { return h_max_; }
  const Matrix& metric() const { return g_; }

  /// State at time t (either sign), reached in ceil(|t| / h_max) equal steps.
  TrajectoryState state_at(double t) const;
  /// State at time t reached in exactly `steps` equal steps.
  TrajectoryState state_at(double t, std::size_t steps) const;
  /// States at 0, h, 2h, ..., t_end.
  std::vector<TrajectoryState> path(double t_end) const;

  /// alpha(x, y)
  std::vector<double> connection(const std::vector<double>& x, const std::vector<double>& y) const;
  double inner(const std::vector<double>& x, const std::vector<double>& y) const;

 private:
  std::size_t n_;
  std::vector<double> alpha_;  // alpha(e_i, e_j)^k at (i*n + j)*n + k
  Matrix g_;
  std::vector<double> x0_;
  double h_max_;
};

/// Samples t = 0, h, ..., t_end (last step shortened to land on t_end).
std::vector<TrajectoryState> integrate(const lie::LiePresentation& pres, const lie::ConnectionMap& conn,
                                       const std::vector<double>& x0, double t_end, double h);

struct DriftReport {
  double speed = 0.0;      ///< max |<V,V> - <X0,X0>|
  double isometry = 0.0;   ///< max Frobenius norm of Phi^T G Phi - G
};

DriftReport invariant_drift(const GeodesicFlow& flow, const std::vector<TrajectoryState>& path);

}  // namespace cmpoly::dynamics
