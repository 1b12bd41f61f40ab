#include "cmpoly/dynamics/crosscheck.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "cmpoly/error.hpp"

namespace cmpoly::dynamics {
namespace {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Mat to_eigen(const Matrix& m, std::size_t n) {
  return Eigen::Map<const Mat>(m.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

Matrix from_eigen(const Mat& m) { return Matrix(m.data(), m.data() + m.size()); }

// Central difference stencils on points -2..2 (offset +2), each with error
// expansion in even powers of the step.
constexpr double kStencil[4][5] = {
    {0.0, -0.5, 0.0, 0.5, 0.0},
    {0.0, 1.0, -2.0, 1.0, 0.0},
    {-0.5, 1.0, 0.0, -1.0, 0.5},
    {1.0, -4.0, 6.0, -4.0, 1.0},
};

}  // namespace

double frobenius(const Matrix& m) {
  double s = 0.0;
  for (double v : m) s += v * v;
  return std::sqrt(s);
}

Matrix jacobi_operator(const std::vector<double>& v, const lie::CurvatureTensor& d) {
  const std::size_t n = d.dim();
  const auto level = d.level(0);
  Matrix j(n * n, 0.0);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t u = 0; u < n; ++u) {
      if (v[u] == 0.0) continue;
      for (std::size_t w = 0; w < n; ++w) {
        const double vv = v[u] * v[w];
        if (vv == 0.0) continue;
        const std::size_t base = ((b * n + u) * n + w) * n;
        for (std::size_t a = 0; a < n; ++a) {
          if (is_zero(level[base + a])) continue;
          j[a * n + b] += vv * level[base + a].get_d();
        }
      }
    }
  }
  return j;
}

Matrix transported_jacobi(const TrajectoryState& state, const lie::CurvatureTensor& d) {
  const std::size_t n = d.dim();
  const Mat phi = to_eigen(state.phi, n);
  const Mat j = to_eigen(jacobi_operator(state.v, d), n);
  const Mat out = phi.partialPivLu().solve(j * phi);
  return from_eigen(out);
}

std::vector<FdJet> finite_difference_jets(const GeodesicFlow& flow, const lie::CurvatureTensor& d, int max_order,
                                          double h, double noise_tolerance) {
  if (!(h > 0.0)) throw UsageError("difference step must be positive");
  const std::size_t n = d.dim();
  const std::size_t nn = n * n;
  const double eps = std::numeric_limits<double>::epsilon();
  // Jacobi operator at offsets m * h / 4, m = -8..8, shared by every level.
  // All samples lie on one uniform integration grid so the integrator error
  // is a smooth function of t and largely cancels in the differences.
  const auto per_unit = static_cast<std::size_t>(std::ceil(h / 4 / flow.h_max()));
  std::vector<Matrix> samples(17);
  double scale = 0.0;
  auto sample = [&](int m) -> const Matrix& {
    Matrix& slot = samples[static_cast<std::size_t>(m + 8)];
    if (slot.empty()) {
      const auto steps = per_unit * static_cast<std::size_t>(std::abs(m));
      slot = transported_jacobi(flow.state_at(h / 4 * m, steps), d);
      for (double v : slot) scale = std::max(scale, std::abs(v));
    }
    return slot;
  };

  std::vector<FdJet> out;
  for (int order = 1; order <= max_order; ++order) {
    FdJet jet;
    jet.order = order;
    if (order > 4) {
      out.push_back(std::move(jet));
      continue;
    }
    const auto& w = kStencil[order - 1];
    std::array<Matrix, 3> level0;
    for (int r = 0; r < 3; ++r) {
      const int stride = 4 >> r;  // h, h/2, h/4 in units of h/4
      const double s = h / (1 << r);
      Matrix acc(nn, 0.0);
      for (int p = -2; p <= 2; ++p) {
        const double wp = w[p + 2];
        if (wp == 0.0) continue;
        const Matrix& f = sample(p * stride);
        for (std::size_t e = 0; e < nn; ++e) acc[e] += wp * f[e];
      }
      const double denom = std::pow(s, order);
      for (auto& v : acc) v /= denom;
      level0[static_cast<std::size_t>(r)] = std::move(acc);
    }
    Matrix l1a(nn), l1b(nn);
    jet.value.assign(nn, 0.0);
    for (std::size_t e = 0; e < nn; ++e) {
      l1a[e] = (4 * level0[1][e] - level0[0][e]) / 3;
      l1b[e] = (4 * level0[2][e] - level0[1][e]) / 3;
      jet.value[e] = (16 * l1b[e] - l1a[e]) / 15;
    }
    Matrix diff(nn);
    for (std::size_t e = 0; e < nn; ++e) diff[e] = jet.value[e] - l1b[e];
    jet.truncation_estimate = frobenius(diff);
    double weight_sum = 0.0;
    for (double v : w) weight_sum += std::abs(v);
    // Extrapolation amplifies noise in the finest level by about 16/15 * 4/3;
    // each sample carries some ten ulps from the integration.
    const double finest = h / 4;
    jet.roundoff_estimate = 1.5 * weight_sum * 10 * eps * std::max(scale, 1.0) / std::pow(finest, order);
    jet.reliable = jet.roundoff_estimate < noise_tolerance * std::max(frobenius(jet.value), 1.0);
    out.push_back(std::move(jet));
  }
  return out;
}

std::vector<double> killing_constancy(const std::vector<TrajectoryState>& path, const std::vector<MultiPoly>& coeffs) {
  std::vector<double> drift;
  if (path.empty()) return drift;
  for (const auto& a : coeffs) {
    const double a0 = a.evaluate(std::span<const double>(path.front().v));
    double worst = 0.0;
    for (const auto& st : path) worst = std::max(worst, std::abs(a.evaluate(std::span<const double>(st.v)) - a0));
    drift.push_back(worst);
  }
  return drift;
}

double conjugation_check(const std::vector<TrajectoryState>& path, const lie::CurvatureTensor& d, const Matrix& c) {
  const std::size_t n = d.dim();
  if (c.size() != n * n) throw UsageError("witness has the wrong shape");
  if (path.empty()) return 0.0;
  const Mat cm = to_eigen(c, n);
  const Mat r0 = to_eigen(transported_jacobi(path.front(), d), n);
  double worst = 0.0;
  for (const auto& st : path) {
    const Mat e = (cm * st.t).exp();
    const Mat einv = (cm * -st.t).exp();
    const Mat predicted = e * r0 * einv;
    const Mat actual = to_eigen(transported_jacobi(st, d), n);
    worst = std::max(worst, (actual - predicted).norm());
  }
  return worst;
}

}  // namespace cmpoly::dynamics
