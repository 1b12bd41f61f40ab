#include <gtest/gtest.h>

#include "cmpoly/error.hpp"
#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/liegroup/connection.hpp"
#include "cmpoly/liegroup/curvature.hpp"
#include "cmpoly/minpoly/c0_witness.hpp"
#include "cmpoly/singer/singer.hpp"
#include "oracles.hpp"

using namespace cmpoly;
using namespace cmpoly::singer;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

lie::CurvatureTensor tensor_for(const lie::LiePresentation& pres, int order) {
  return lie::curvature_derivatives(pres, lie::koszul(pres), order);
}

// dim of {A skew : A.D_i = 0, i <= j}, from a naive dense action.
std::size_t naive_stabilizer_dim(const lie::CurvatureTensor& d, int j, const QMatrix& metric) {
  const std::size_t n = d.dim();
  const auto basis = minpoly::skew_basis(metric);
  std::vector<std::vector<Rational>> rows;
  for (int level = 0; level <= j; ++level) {
    const std::size_t slots = static_cast<std::size_t>(level) + 3;
    std::vector<std::size_t> tuple(slots, 0);
    std::size_t total = 1;
    for (std::size_t s = 0; s < slots; ++s) total *= n;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (std::size_t s = slots; s-- > 0;) {
        tuple[s] = rest % n;
        rest /= n;
      }
      for (std::size_t comp = 0; comp < n; ++comp) {
        std::vector<Rational> row(basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
          const QMatrix& a = basis[b];
          Rational v(0);
          for (std::size_t m = 0; m < n; ++m) v += a(comp, m) * d.at(level, tuple, m);
          for (std::size_t s = 0; s < slots; ++s) {
            std::vector<std::size_t> moved = tuple;
            for (std::size_t m = 0; m < n; ++m) {
              if (a(m, tuple[s]) == 0) continue;
              moved[s] = m;
              v -= a(m, tuple[s]) * d.at(level, moved, comp);
            }
          }
          row[b] = v;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return basis.size() - oracle::rank(rows);
}

}  // namespace

TEST(Singer, ChainMatchesNaiveStabilizers) {
  for (const auto* spec : {"heisenberg3", "su2_berger(2)", "su2_berger(1/2)", "su2_biinvariant", "flat_3"}) {
    const auto pres = lie::catalog_from_spec(spec);
    const auto d = tensor_for(pres, 3);
    const auto chain = stabilizer_chain(d, 3, pres.metric());
    ASSERT_EQ(chain.size(), 5u);
    EXPECT_EQ(chain[0].size(), 3u);
    for (int j = 0; j <= 3; ++j) {
      EXPECT_EQ(chain[static_cast<std::size_t>(j) + 1].size(), naive_stabilizer_dim(d, j, pres.metric()))
          << spec << " level " << j;
      EXPECT_EQ(stabilizer_algebra(d, j, pres.metric()).size(), chain[static_cast<std::size_t>(j) + 1].size());
    }
  }
}

TEST(Singer, HeisenbergIsotropyIsOneDimensional) {
  const auto pres = lie::catalog_from_spec("heisenberg3");
  const auto d = tensor_for(pres, 4);
  const auto report = singer_invariant(d, 3, pres.metric());
  EXPECT_EQ(report.dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(report.k_singer, std::optional<int>(0));
  EXPECT_TRUE(report.nested);
  EXPECT_TRUE(report.bound_holds);
}

TEST(Singer, SymmetricSpacesStabilizeImmediately) {
  for (const auto* spec : {"su2_biinvariant", "flat_3", "torus_2"}) {
    const auto pres = lie::catalog_from_spec(spec);
    const auto d = tensor_for(pres, 2);
    const auto report = singer_invariant(d, 1, pres.metric());
    EXPECT_EQ(report.k_singer, std::optional<int>(0)) << spec;
    EXPECT_TRUE(report.bound_holds) << spec;
  }
}

TEST(Singer, StabilizersAreNestedSubalgebras) {
  const auto pres = lie::catalog_from_spec("su2_berger(1/2)");
  const auto d = tensor_for(pres, 3);
  const auto chain = stabilizer_chain(d, 3, pres.metric());
  for (std::size_t j = 1; j < chain.size(); ++j) {
    EXPECT_LE(chain[j].size(), chain[j - 1].size());
    for (const auto& a : chain[j]) {
      EXPECT_TRUE(annihilates(a, d, static_cast<int>(j) - 1));
      EXPECT_TRUE(minpoly::is_metric_skew(pres.metric(), a));
    }
    EXPECT_TRUE(is_lie_subalgebra(chain[j], d, static_cast<int>(j) - 1));
  }
}

TEST(Singer, StabilizerActsOnJetsByDerivation) {
  // For A in g(j): [A, R^i(X)] equals the derivative of R^i along AX, i <= j.
  oracle::Random rng(67);
  const auto pres = lie::catalog_from_spec("heisenberg5");
  const auto seq = jets::JetSequence::from_lie(pres);
  const auto d = seq.curvature(3);
  const auto g3 = stabilizer_algebra(*d, 3, pres.metric());
  ASSERT_FALSE(g3.empty());
  for (int trial = 0; trial < 3; ++trial) {
    const QVector pt = rng.nonzero_vector(5);
    for (const auto& a : g3) {
      const QVector ax = a.apply(pt);
      for (int i = 0; i <= 3; ++i) {
        const PolyMatrix& r = seq.jet(i);
        QMatrix directional(5, 5);
        for (std::size_t row = 0; row < 5; ++row)
          for (std::size_t col = 0; col < 5; ++col)
            for (std::size_t m = 0; m < 5; ++m) directional(row, col) += ax[m] * r(row, col).derivative(m).evaluate(pt);
        EXPECT_EQ(commutator(a, r.evaluate(pt)), directional) << "order " << i;
      }
    }
  }
}

TEST(Singer, ActionRequiresSkewMatrix) {
  const auto pres = lie::catalog_from_spec("heisenberg3");
  const auto d = tensor_for(pres, 0);
  EXPECT_THROW(tensor_action(QMatrix::identity(3), d, 0, pres.metric()), UsageError);
  EXPECT_EQ(tensor_action(QMatrix(3, 3), d, 0, pres.metric()), std::vector<Rational>(d.level(0).size()));
}
