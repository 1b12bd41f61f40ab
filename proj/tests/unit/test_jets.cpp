#include <gtest/gtest.h>

#include <thread>

#include "cmpoly/error.hpp"
#include "cmpoly/io/serialize.hpp"
#include "cmpoly/jets/admissibility.hpp"
#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "oracles.hpp"

using namespace cmpoly;
using namespace cmpoly::jets;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

MultiPoly norm2(std::size_t n) {
  MultiPoly s(n);
  for (std::size_t i = 0; i < n; ++i) s += MultiPoly::variable(n, i) * MultiPoly::variable(n, i);
  return s;
}

PolyLambda heisenberg_p(std::size_t n) { return PolyLambda::monic(n, {MultiPoly(n), norm2(n), MultiPoly(n)}); }

JetSequence heis3() { return JetSequence::from_lie(lie::catalog_from_spec("heisenberg3")); }

}  // namespace

TEST(Jets, HeisenbergCurvatureOperatorAlongCenter) {
  // R(Y, e3)e3 = Y/4 for Y in span(e1, e2) and 0 for Y = e3.
  const auto r0 = heis3().jet(0).evaluate(QVector{q(0), q(0), q(1)});
  EXPECT_EQ(r0, QMatrix::from_rows(3, 3, {q(1, 4), q(0), q(0), q(0), q(1, 4), q(0), q(0), q(0), q(0)}));
}

TEST(Jets, HomogeneousSelfAdjointAndAnnihilateDirection) {
  for (const auto* spec : {"heisenberg3", "su2_berger(2)", "su2_berger(1/2)", "heisenberg_scaled(3,3)", "flat_3"}) {
    const auto seq = JetSequence::from_lie(lie::catalog_from_spec(spec));
    const auto report = validate(seq, 4);
    EXPECT_TRUE(report.ok()) << spec << ": "
                             << (report.ok() ? "" : to_string(report.violations.front().kind));
    for (int k = 0; k <= 4; ++k) EXPECT_TRUE(seq.jet(k).entries_homogeneous(k + 2)) << spec;
  }
}

TEST(Jets, ValidateFlagsBrokenLists) {
  const std::size_t n = 2;
  const auto x1 = MultiPoly::variable(n, 0), x2 = MultiPoly::variable(n, 1);
  PolyMatrix asym(2, n);
  asym(0, 1) = x1 * x1;
  PolyMatrix zero1(2, n);
  const auto seq = JetSequence::from_list("asym", QMatrix::identity(2), {asym, zero1});
  const auto report = validate(seq, 1);
  ASSERT_FALSE(report.ok());
  bool saw_adjoint = false;
  for (const auto& v : report.violations) saw_adjoint |= v.kind == Violation::Kind::not_self_adjoint;
  EXPECT_TRUE(saw_adjoint);

  PolyMatrix wrong_degree(2, n);
  wrong_degree(0, 0) = x1;
  EXPECT_THROW(JetSequence::from_list("bad", QMatrix::identity(2), {wrong_degree}), UsageError);

  PolyMatrix diag(2, n);
  diag(0, 0) = x1 * x1;
  diag(1, 1) = x2 * x2;
  const auto short_list = JetSequence::from_list("short", QMatrix::identity(2), {diag});
  EXPECT_EQ(short_list.available_orders(), std::optional<int>(1));
  EXPECT_THROW(short_list.jet(1), UsageError);
}

TEST(Jets, GeneratorRecursionIsACommutatorChain) {
  // C(X) = x1 (E12 - E21) rotates the (1,2)-plane.
  const std::size_t n = 2;
  const auto x1 = MultiPoly::variable(n, 0), x2 = MultiPoly::variable(n, 1);
  C0Generator gen;
  gen.r0 = PolyMatrix(2, n);
  gen.r0(0, 0) = x1 * x1;
  gen.r0(1, 1) = x2 * x2;
  gen.c = PolyMatrix(2, n);
  gen.c(0, 1) = x1;
  gen.c(1, 0) = -x1;
  const auto seq = JetSequence::from_generator("rot", QMatrix::identity(2), gen);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(seq.jet(k + 1), commutator(gen.c, seq.jet(k)));
  EXPECT_TRUE(seq.jet(3).entries_homogeneous(5));

  C0Generator bad = gen;
  bad.c(1, 0) = x1;
  EXPECT_THROW(JetSequence::from_generator("sym", QMatrix::identity(2), bad), UsageError);
}

TEST(Jets, CopiesShareTheCacheAcrossThreads) {
  const auto seq = heis3();
  const auto copy = seq;
  std::vector<const PolyMatrix*> seen(4, nullptr);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    workers.emplace_back([&, t] { seen[t] = &(t % 2 ? copy : seq).jet(4); });
  }
  for (auto& w : workers) w.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(&get_jet(seq, 2), &copy.jet(2));
}

TEST(Admissibility, HeisenbergPolynomialAnnihilatesJets) {
  const auto seq = heis3();
  const auto report = check_admissible(seq, heisenberg_p(3));
  EXPECT_TRUE(report.is_admissible);
  EXPECT_TRUE(report.residual.is_zero());
  EXPECT_FALSE(check_admissible(seq, PolyLambda::lambda_power(3, 3)).is_admissible);
  EXPECT_FALSE(check_admissible(seq, PolyLambda::monic(3, {MultiPoly(3), norm2(3) * q(2), MultiPoly(3)}))
                   .is_admissible);
}

TEST(Admissibility, RejectsMalformedPolynomials) {
  const auto seq = heis3();
  EXPECT_THROW(check_admissible(seq, PolyLambda::monic(3, {norm2(3)})), UsageError);
  EXPECT_THROW(check_admissible(seq, PolyLambda(3, {MultiPoly::constant(3, 2), MultiPoly(3)})), UsageError);
}

TEST(Admissibility, EvalMapIsLinearInP) {
  oracle::Random rng(47);
  const auto seq = heis3();
  for (int trial = 0; trial < 5; ++trial) {
    const PolyLambda a(3, {MultiPoly::constant(3, 1), rng.homogeneous(3, 1, 2), rng.homogeneous(3, 2, 3)});
    const PolyLambda b(3, {MultiPoly::constant(3, 1), rng.homogeneous(3, 1, 2), rng.homogeneous(3, 2, 3)});
    EXPECT_EQ(eval_map(seq, a + b), eval_map(seq, a) + eval_map(seq, b));
  }
}

TEST(Jets, DumpRoundTrip) {
  const auto seq = heis3();
  for (int k = 0; k <= 3; ++k) {
    const auto j = io::jet_dump(seq.jet(k), k);
    EXPECT_EQ(j["order"], k);
    EXPECT_EQ(io::jet_from_json(j), seq.jet(k));
  }
}
