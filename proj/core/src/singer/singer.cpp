#include "cmpoly/singer/singer.hpp"

#include <algorithm>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"
#include "cmpoly/minpoly/c0_witness.hpp"

namespace cmpoly::singer {
namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Scatter form of the derivation action; only nonzero entries of T and A
// contribute.
std::vector<Rational> act(const QMatrix& a, std::span<const Rational> t, std::size_t n, std::size_t slots) {
  std::vector<Rational> out(t.size());
  std::vector<std::vector<std::pair<std::size_t, Rational>>> column(n);  // column[q] = {(r, A(r,q))}
  std::vector<std::vector<std::pair<std::size_t, Rational>>> row(n);     // row[r] = {(q, A(r,q))}
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t q = 0; q < n; ++q) {
      if (is_zero(a(r, q))) continue;
      column[q].emplace_back(r, a(r, q));
      row[r].emplace_back(q, a(r, q));
    }
  }
  std::vector<std::size_t> weight(slots);
  for (std::size_t s = 0; s < slots; ++s) weight[s] = ipow(n, slots - 1 - s);
  const std::size_t tuples = ipow(n, slots);
  std::vector<std::size_t> digits(slots, 0);
  Rational tmp;
  for (std::size_t tu = 0; tu < tuples; ++tu) {
    for (std::size_t comp = 0; comp < n; ++comp) {
      const Rational& v = t[tu * n + comp];
      if (is_zero(v)) continue;
      for (const auto& [r, c] : column[comp]) {
        tmp = c * v;
        out[tu * n + r] += tmp;
      }
      // T(.., e_r, ..) feeds every slot value q with A(r, q) != 0.
      for (std::size_t s = 0; s < slots; ++s) {
        const std::size_t r = digits[s];
        const std::size_t stripped = tu - r * weight[s];
        for (const auto& [q, c] : row[r]) {
          tmp = c * v;
          out[(stripped + q * weight[s]) * n + comp] -= tmp;
        }
      }
    }
    for (std::size_t s = slots; s-- > 0;) {
      if (++digits[s] < n) break;
      digits[s] = 0;
    }
  }
  return out;
}

std::vector<Rational> act_level(const QMatrix& a, const lie::CurvatureTensor& d, int level) {
  return act(a, d.level(level), d.dim(), static_cast<std::size_t>(level) + 3);
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return is_zero(c); });
}

// Subspace of span(basis) annihilating level j, via the Gram matrix of the
// images: over Q, M c = 0 iff M^T M c = 0.
std::vector<QMatrix> restrict_to_level(const std::vector<QMatrix>& basis, const lie::CurvatureTensor& d, int level) {
  const std::size_t r = basis.size();
  if (r == 0) return {};
  std::vector<std::vector<Rational>> images;
  images.reserve(r);
  for (const auto& b : basis) images.push_back(act_level(b, d, level));
  QMatrix gram(r, r);
  Rational tmp;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      Rational sum(0);
      for (std::size_t e = 0; e < images[i].size(); ++e) {
        if (is_zero(images[i][e]) || is_zero(images[j][e])) continue;
        tmp = images[i][e] * images[j][e];
        sum += tmp;
      }
      gram(i, j) = sum;
      gram(j, i) = sum;
    }
  }
  std::vector<QMatrix> out;
  for (const auto& v : q_nullspace(gram)) {
    QMatrix a(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < r; ++i) {
      if (!is_zero(v[i])) a += basis[i] * v[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

std::vector<Rational> tensor_action(const QMatrix& a, const lie::CurvatureTensor& d, int level, const QMatrix& metric) {
  if (!minpoly::is_metric_skew(metric, a)) throw UsageError("A is not skew with respect to the metric");
  if (level < 0 || level > d.max_order()) throw UsageError("curvature level not computed");
  return act_level(a, d, level);
}

bool annihilates(const QMatrix& a, const lie::CurvatureTensor& d, int j) {
  for (int i = 0; i <= j; ++i) {
    if (!all_zero(act_level(a, d, i))) return false;
  }
  return true;
}

std::vector<std::vector<QMatrix>> stabilizer_chain(const lie::CurvatureTensor& d, int max_level, const QMatrix& metric) {
  if (max_level > d.max_order()) throw UsageError("curvature level not computed");
  std::vector<std::vector<QMatrix>> chain;
  chain.push_back(minpoly::skew_basis(metric));
  for (int j = 0; j <= max_level; ++j) chain.push_back(restrict_to_level(chain.back(), d, j));
  return chain;
}

std::vector<QMatrix> stabilizer_algebra(const lie::CurvatureTensor& d, int j, const QMatrix& metric) {
  return stabilizer_chain(d, j, metric).back();
}

bool is_lie_subalgebra(const std::vector<QMatrix>& basis, const lie::CurvatureTensor& d, int j) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!annihilates(commutator(basis[a], basis[b]), d, j)) return false;
    }
  }
  return true;
}

SingerReport singer_invariant(const lie::CurvatureTensor& d, int k, const QMatrix& metric) {
  if (d.max_order() < k + 1) throw UsageError("singer_invariant needs curvature to order k+1");
  SingerReport report;
  report.k = k;
  const auto chain = stabilizer_chain(d, k + 1, metric);
  report.nested = true;
  for (int j = 0; j <= k + 1; ++j) {
    const auto& g = chain[static_cast<std::size_t>(j) + 1];
    report.dims.push_back(g.size());
    // Members of g(j) must satisfy every condition of g(j-1).
    for (const auto& a : g) {
      if (!annihilates(a, d, j)) report.nested = false;
    }
  }
  for (int j = 0; j <= k; ++j) {
    if (report.dims[static_cast<std::size_t>(j)] == report.dims[static_cast<std::size_t>(j) + 1]) {
      report.k_singer = j;
      break;
    }
  }
  report.bound_holds = report.nested && report.k_singer.has_value() && *report.k_singer <= k;
  return report;
}

}  // namespace cmpoly::singer
