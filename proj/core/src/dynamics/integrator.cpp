#include "cmpoly/dynamics/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "cmpoly/error.hpp"

namespace cmpoly::dynamics {
namespace {

struct Deriv {
  std::vector<double> dv;
  Matrix dphi;
};

}  // namespace

GeodesicFlow::GeodesicFlow(const lie::LiePresentation& pres, const lie::ConnectionMap& conn, std::vector<double> x0,
                           double h_max)
    : n_(pres.dim()), alpha_(n_ * n_ * n_), g_(n_ * n_), x0_(std::move(x0)), h_max_(h_max) {
  if (x0_.size() != n_) throw UsageError("initial velocity has the wrong length");
  if (!(h_max_ > 0.0)) throw UsageError("step size must be positive");
  for (std::size_t i = 0; i < alpha_.size(); ++i) alpha_[i] = conn.coefficients()[i].get_d();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) g_[i * n_ + j] = pres.metric()(i, j).get_d();
  }
}

std::vector<double> GeodesicFlow::connection(const std::vector<double>& x, const std::vector<double>& y) const {
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      const double xy = x[i] * y[j];
      if (xy == 0.0) continue;
      const double* a = &alpha_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k) out[k] += xy * a[k];
    }
  }
  return out;
}

double GeodesicFlow::inner(const std::vector<double>& x, const std::vector<double>& y) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) s += x[i] * g_[i * n_ + j] * y[j];
  }
  return s;
}

TrajectoryState GeodesicFlow::state_at(double t) const {
  return state_at(t, static_cast<std::size_t>(std::ceil(std::abs(t) / h_max_)));
}

TrajectoryState GeodesicFlow::state_at(double t, std::size_t steps) const {
  const std::size_t n = n_;
  TrajectoryState st;
  st.v = x0_;
  st.phi.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) st.phi[i * n + i] = 1.0;
  if (steps == 0 || t == 0.0) return st;
  const double h = t / static_cast<double>(steps);

  auto rhs = [&](const std::vector<double>& v, const Matrix& phi) {
    Deriv d;
    d.dv = connection(v, v);
    for (auto& c : d.dv) c = -c;
    // A(V)_{kj} = sum_i v_i alpha(e_i, e_j)^k
    Matrix a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double* al = &alpha_[(i * n + j) * n];
        for (std::size_t k = 0; k < n; ++k) a[k * n + j] += v[i] * al[k];
      }
    }
    d.dphi.assign(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t m = 0; m < n; ++m) {
        const double arm = a[r * n + m];
        if (arm == 0.0) continue;
        for (std::size_t c = 0; c < n; ++c) d.dphi[r * n + c] -= arm * phi[m * n + c];
      }
    }
    return d;
  };
  auto axpy = [](const std::vector<double>& x, double s, const std::vector<double>& dx) {
    std::vector<double> out(x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * dx[i];
    return out;
  };

  for (std::size_t step = 0; step < steps; ++step) {
    const Deriv k1 = rhs(st.v, st.phi);
    const Deriv k2 = rhs(axpy(st.v, h / 2, k1.dv), axpy(st.phi, h / 2, k1.dphi));
    const Deriv k3 = rhs(axpy(st.v, h / 2, k2.dv), axpy(st.phi, h / 2, k2.dphi));
    const Deriv k4 = rhs(axpy(st.v, h, k3.dv), axpy(st.phi, h, k3.dphi));
    for (std::size_t i = 0; i < n; ++i) st.v[i] += h / 6 * (k1.dv[i] + 2 * k2.dv[i] + 2 * k3.dv[i] + k4.dv[i]);
    for (std::size_t i = 0; i < n * n; ++i) {
      st.phi[i] += h / 6 * (k1.dphi[i] + 2 * k2.dphi[i] + 2 * k3.dphi[i] + k4.dphi[i]);
    }
  }
  st.t = t;
  return st;
}

std::vector<TrajectoryState> GeodesicFlow::path(double t_end) const {
  if (!(t_end > 0.0)) throw UsageError("t_end must be positive");
  // March once and record at each step rather than restarting from 0.
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / h_max_ - 1e-9));
  const double h = t_end / static_cast<double>(steps);
  std::vector<TrajectoryState> out;
  out.push_back(state_at(0.0));
  GeodesicFlow stepper(*this);
  stepper.h_max_ = h;
  for (std::size_t s = 1; s <= steps; ++s) {
    stepper.x0_ = out.back().v;
    TrajectoryState next = stepper.state_at(h);
    // Compose transports: Phi(t+h) = Phi_step * Phi(t).
    Matrix composed(n_ * n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t m = 0; m < n_; ++m) {
        const double a = next.phi[r * n_ + m];
        for (std::size_t c = 0; c < n_; ++c) composed[r * n_ + c] += a * out.back().phi[m * n_ + c];
      }
    }
    next.phi = std::move(composed);
    next.t = h * static_cast<double>(s);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<TrajectoryState> integrate(const lie::LiePresentation& pres, const lie::ConnectionMap& conn,
                                       const std::vector<double>& x0, double t_end, double h) {
  return GeodesicFlow(pres, conn, x0, h).path(t_end);
}

DriftReport invariant_drift(const GeodesicFlow& flow, const std::vector<TrajectoryState>& path) {
  const std::size_t n = flow.dim();
  const Matrix& g = flow.metric();
  const double e0 = flow.inner(flow.x0(), flow.x0());
  DriftReport report;
  for (const auto& st : path) {
    report.speed = std::max(report.speed, std::abs(flow.inner(st.v, st.v) - e0));
    double norm2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        double s = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) s += st.phi[a * n + r] * g[a * n + b] * st.phi[b * n + c];
        }
        const double d = s - g[r * n + c];
        norm2 += d * d;
      }
    }
    report.isometry = std::max(report.isometry, std::sqrt(norm2));
  }
  return report;
}

}  // namespace cmpoly::dynamics
