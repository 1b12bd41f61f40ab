#include "cmpoly/liegroup/curvature.hpp"

#include "cmpoly/error.hpp"

namespace cmpoly::lie {
namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<Rational> base_level(const LiePresentation& pres, const ConnectionMap& conn) {
  const std::size_t n = pres.dim();
  std::vector<Rational> out(ipow(n, 4));
  for (std::size_t y = 0; y < n; ++y) {
    const QVector ey = basis_vector(n, y);
    for (std::size_t u = 0; u < n; ++u) {
      const QVector eu = basis_vector(n, u);
      const QVector yu = pres.bracket(ey, eu);
      for (std::size_t v = 0; v < n; ++v) {
        const QVector ev = basis_vector(n, v);
        const QVector t1 = conn.apply(ey, conn.apply(eu, ev));
        const QVector t2 = conn.apply(eu, conn.apply(ey, ev));
        const QVector t3 = conn.apply(yu, ev);
        const std::size_t base = ((y * n + u) * n + v) * n;
        for (std::size_t a = 0; a < n; ++a) out[base + a] = t1[a] - t2[a] - t3[a];
      }
    }
  }
  return out;
}

// One covariant derivative on left-invariant arguments.
std::vector<Rational> next_level(std::span<const Rational> prev, std::size_t n, std::size_t slots,
                                 const ConnectionMap& conn) {
  const std::size_t tuples = ipow(n, slots);
  std::vector<Rational> out(tuples * n * n);
  std::vector<std::size_t> weight(slots);
  for (std::size_t s = 0; s < slots; ++s) weight[s] = ipow(n, slots - 1 - s);
  std::vector<std::size_t> digits(slots, 0);
  Rational tmp;
  for (std::size_t w = 0; w < n; ++w) {
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t t = 0; t < tuples; ++t) {
      Rational* dst = &out[(w * tuples + t) * n];
      // alpha(e_w, D(tuple))
      const Rational* src = &prev[t * n];
      for (std::size_t b = 0; b < n; ++b) {
        if (is_zero(src[b])) continue;
        for (const auto& [a, c] : conn.sparse(w, b)) {
          tmp = src[b] * c;
          dst[a] += tmp;
        }
      }
      // minus D with one slot replaced by alpha(e_w, slot)
      for (std::size_t s = 0; s < slots; ++s) {
        const std::size_t d = digits[s];
        const std::size_t stripped = t - d * weight[s];
        for (const auto& [m, c] : conn.sparse(w, d)) {
          const Rational* other = &prev[(stripped + m * weight[s]) * n];
          for (std::size_t a = 0; a < n; ++a) {
            if (is_zero(other[a])) continue;
            tmp = other[a] * c;
            dst[a] -= tmp;
          }
        }
      }
      for (std::size_t s = slots; s-- > 0;) {
        if (++digits[s] < n) break;
        digits[s] = 0;
      }
    }
  }
  return out;
}

}  // namespace

const Rational& CurvatureTensor::at(int k, std::span<const std::size_t> slots, std::size_t comp) const {
  if (k < 0 || k > max_order()) throw UsageError("curvature order out of range");
  if (slots.size() != static_cast<std::size_t>(k) + 3) throw UsageError("curvature slot tuple has wrong length");
  std::size_t idx = 0;
  for (auto s : slots) idx = idx * dim_ + s;
  return levels_[static_cast<std::size_t>(k)][idx * dim_ + comp];
}

QVector CurvatureTensor::value(int k, std::span<const std::size_t> slots) const {
  QVector v(dim_);
  for (std::size_t a = 0; a < dim_; ++a) v[a] = at(k, slots, a);
  return v;
}

void CurvatureTensor::push_level(std::vector<Rational> values) {
  const std::size_t expected = ipow(dim_, levels_.size() + 4);
  if (values.size() != expected) throw UsageError("curvature level has wrong size");
  levels_.push_back(std::move(values));
}

CurvatureTensor curvature_derivatives(const LiePresentation& pres, const ConnectionMap& conn, int max_order) {
  if (conn.dim() != pres.dim()) throw UsageError("connection and presentation dimensions differ");
  CurvatureTensor d(pres.dim());
  d.push_level(base_level(pres, conn));
  return extend_curvature(std::move(d), conn, max_order);
}

CurvatureTensor extend_curvature(CurvatureTensor base, const ConnectionMap& conn, int max_order) {
  if (base.max_order() < 0) throw UsageError("extend_curvature needs the base level");
  const std::size_t n = base.dim();
  while (base.max_order() < max_order) {
    const int k = base.max_order();
    base.push_level(next_level(base.level(k), n, static_cast<std::size_t>(k) + 3, conn));
  }
  return base;
}

PolyMatrix symmetrized_jet(const CurvatureTensor& d, int k) {
  if (k < 0 || k > d.max_order()) {
    throw UsageError("jet order " + std::to_string(k) + " exceeds computed curvature order " +
                     std::to_string(d.max_order()));
  }
  const std::size_t n = d.dim();
  const std::size_t kk = static_cast<std::size_t>(k);
  const auto data = d.level(k);
  PolyMatrix out(n, n);
  // X-slots: the k derivative slots plus U and V; Y = e_b is slot kk.
  const std::size_t xslots = kk + 2;
  const std::size_t xtuples = ipow(n, xslots);
  std::vector<std::size_t> digits(xslots, 0);
  Exponents e(n, 0);
  for (std::size_t t = 0; t < xtuples; ++t) {
    std::fill(e.begin(), e.end(), 0);
    for (auto dgt : digits) e[dgt] += 1;
    // Full slot index: derivative digits, then b, then u, v.
    std::size_t head = 0;
    for (std::size_t s = 0; s < kk; ++s) head = head * n + digits[s];
    const std::size_t tail = digits[kk] * n + digits[kk + 1];
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t idx = ((head * n + b) * n * n + tail) * n;
      for (std::size_t a = 0; a < n; ++a) {
        if (!is_zero(data[idx + a])) out(a, b).add_term(e, data[idx + a]);
      }
    }
    for (std::size_t s = xslots; s-- > 0;) {
      if (++digits[s] < n) break;
      digits[s] = 0;
    }
  }
  out.set_declared_degree(k + 2);
  return out;
}

}  // namespace cmpoly::lie
