#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmpoly/dynamics/integrator.hpp"
#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/poly_matrix.hpp"
#include "cmpoly/liegroup/curvature.hpp"

namespace cmpoly::dynamics {

/// Jacobi operator J(t)Y = R(Y, V)V, pulled back by the transport:
/// Phi(t)^{-1} J(t) Phi(t).
Matrix transported_jacobi(const TrajectoryState& state, const lie::CurvatureTensor& d);

/// Jacobi operator Y -> D_0(Y, v, v) at a floating velocity.
Matrix jacobi_operator(const std::vector<double>& v, const lie::CurvatureTensor& d);

struct FdJet {
  int order = 0;
  Matrix value;                 ///< approximates R^order(X0)
  bool reliable = false;
  double roundoff_estimate = 0.0;
  double truncation_estimate = 0.0;  ///< change across the last extrapolation level
};

/// Central differences of t -> transported Jacobi operator at t = 0 with
/// steps h, h/2, h/4 and two Richardson levels. An order is unreliable when
/// its estimated roundoff exceeds noise_tolerance relative to the result.
/// Orders above 4 are refused (unreliable, empty value).
std::vector<FdJet> finite_difference_jets(const GeodesicFlow& flow, const lie::CurvatureTensor& d, int max_order,
                                          double h, double noise_tolerance = 1e-5);

/// max over the path of |a(V(t)) - a(V(0))| for each polynomial.
std::vector<double> killing_constancy(const std::vector<TrajectoryState>& path, const std::vector<MultiPoly>& coeffs);

/// max over the path of || R~(t) - exp(tC) R~(0) exp(-tC) ||_F, with the
/// matrix exponential by scaling and squaring with a Pade approximant.
double conjugation_check(const std::vector<TrajectoryState>& path, const lie::CurvatureTensor& d, const Matrix& c);

double frobenius(const Matrix& m);

}  // namespace cmpoly::dynamics
