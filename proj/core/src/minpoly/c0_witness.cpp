#include "cmpoly/minpoly/c0_witness.hpp"

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/linsolve.hpp"

namespace cmpoly::minpoly {

std::vector<QMatrix> skew_basis(const QMatrix& metric) {
  const std::size_t n = metric.rows();
  const QMatrix ginv = inverse(metric);
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      QMatrix s(n, n);
      s(i, j) = 1;
      s(j, i) = -1;
      out.push_back(ginv * s);
    }
  }
  return out;
}

bool is_metric_skew(const QMatrix& metric, const QMatrix& a) {
  const QMatrix ga = metric * a;
  return (ga + ga.transpose()).is_zero();
}

C0Witness c0_witness(const jets::JetSequence& seq, const QVector& x, int orders) {
  if (orders < 1) throw UsageError("c0_witness needs orders >= 1");
  const std::size_t n = seq.dim();
  if (x.size() != n) throw UsageError("direction has the wrong length");
  const auto basis = skew_basis(seq.metric());
  const std::size_t m = basis.size();
  const std::size_t block = n * n;

  QMatrix system(block * static_cast<std::size_t>(orders), m);
  QVector rhs(system.rows());
  QMatrix current = seq.jet(0).evaluate(x);
  for (int i = 0; i < orders; ++i) {
    const QMatrix next = seq.jet(i + 1).evaluate(x);
    const std::size_t off = block * static_cast<std::size_t>(i);
    for (std::size_t l = 0; l < m; ++l) {
      const QMatrix col = commutator(basis[l], current);
      for (std::size_t e = 0; e < block; ++e) system(off + e, l) = col.values()[e];
    }
    for (std::size_t e = 0; e < block; ++e) rhs[off + e] = next.values()[e];
    current = next;
  }

  C0Witness out;
  out.x = x;
  out.c = QMatrix(n, n);
  const auto solution = solve_affine(system, rhs);
  if (!solution) return out;
  const QVector coords = least_norm_member(*solution);
  for (std::size_t l = 0; l < m; ++l) {
    if (!is_zero(coords[l])) out.c += basis[l] * coords[l];
  }
  out.feasible = true;
  out.orders_satisfied = orders;
  out.solution_dimension = solution->nullspace.size();
  return out;
}

int commutator_orders(const jets::JetSequence& seq, const QVector& x, const QMatrix& c, int max_orders) {
  QMatrix current = seq.jet(0).evaluate(x);
  for (int i = 0; i < max_orders; ++i) {
    if (auto avail = seq.available_orders(); avail && i + 1 >= *avail) return i;
    const QMatrix next = seq.jet(i + 1).evaluate(x);
    if (commutator(c, current) != next) return i;
    current = next;
  }
  return max_orders;
}

}  // namespace cmpoly::minpoly
