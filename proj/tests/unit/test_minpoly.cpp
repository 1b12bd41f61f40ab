#include <gtest/gtest.h>

#include <set>

#include "cmpoly/error.hpp"
#include "cmpoly/jets/admissibility.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/minpoly/c0_witness.hpp"
#include "cmpoly/minpoly/diagnostics.hpp"
#include "cmpoly/minpoly/pointwise.hpp"
#include "cmpoly/minpoly/rational_relation.hpp"
#include "cmpoly/minpoly/sampling.hpp"
#include "cmpoly/minpoly/solver.hpp"
#include "oracles.hpp"

using namespace cmpoly;
using namespace cmpoly::jets;
using namespace cmpoly::minpoly;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

JetSequence lie_seq(const std::string& spec) { return JetSequence::from_lie(lie::catalog_from_spec(spec)); }

// (diag(x1^2, x2^2), diag(x1^3, x2^3), diag(x1^4, c*x2^4))
JetSequence diagonal_sequence(long c) {
  const std::size_t n = 2;
  std::vector<PolyMatrix> jets;
  for (unsigned k = 0; k < 3; ++k) {
    PolyMatrix m(2, n);
    m(0, 0) = pow(x(n, 0), k + 2);
    m(1, 1) = pow(x(n, 1), k + 2) * (k == 2 ? q(c) : q(1));
    jets.push_back(m);
  }
  return JetSequence::from_list("diag", QMatrix::identity(2), jets);
}

// Independent pointwise minimal polynomial from the first dependency among
// the flattened R^0(X), R^1(X), ...
UniPoly pointwise_oracle(const JetSequence& seq, const QVector& pt) {
  const std::size_t n = seq.dim();
  std::vector<QMatrix> values;
  for (int j = 0;; ++j) {
    values.push_back(seq.jet(j).evaluate(pt));
    if (j == 0 && values[0].is_zero()) return UniPoly({q(1)});
    std::vector<std::vector<Rational>> rows(n * n, std::vector<Rational>(values.size()));
    for (std::size_t e = 0; e < n * n; ++e)
      for (std::size_t c = 0; c < values.size(); ++c) rows[e][c] = values[c].values()[e];
    const auto ns = oracle::nullspace(rows, values.size());
    if (ns.empty()) continue;
    QVector v = ns.front();
    const Rational lead = v.back();
    for (auto& c : v) c /= lead;
    // The relation sum_i v_i R^i = 0 gives P(lambda) = sum_i v_i lambda^i.
    return UniPoly(v);
  }
}

MultiPoly norm2(std::size_t n) {
  MultiPoly s(n);
  for (std::size_t i = 0; i < n; ++i) s += x(n, i) * x(n, i);
  return s;
}

}  // namespace

TEST(Sampling, DeterministicNonzeroAndBounded) {
  PointSampler a(5), b(5), c(6);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const auto pa = a.next(3), pb = b.next(3), pc = c.next(3);
    EXPECT_EQ(pa, pb);
    differs |= pa != pc;
    bool nonzero = false;
    for (const auto& v : pa) {
      EXPECT_LE(abs(v), 9);
      EXPECT_EQ(v.get_den(), 1);
      nonzero |= v != 0;
    }
    EXPECT_TRUE(nonzero);
  }
  EXPECT_TRUE(differs);
}

TEST(Pointwise, MatchesIndependentElimination) {
  oracle::Random rng(53);
  for (const auto* spec : {"heisenberg3", "su2_berger(2)", "su2_biinvariant", "flat_3"}) {
    const auto seq = lie_seq(spec);
    for (int trial = 0; trial < 10; ++trial) {
      QVector pt = rng.nonzero_vector(3);
      if (trial == 0) pt = QVector{q(0), q(0), q(1)};
      const auto pw = pointwise_min_poly(seq, pt);
      ASSERT_TRUE(pw.has_value()) << spec;
      EXPECT_EQ(pw->p, pointwise_oracle(seq, pt)) << spec;
      EXPECT_EQ(pw->k, pw->p.degree());
    }
  }
}

TEST(Pointwise, ZeroCurvatureGivesConstantPolynomial) {
  const auto pw = pointwise_min_poly(lie_seq("flat_3"), QVector{q(1), q(2), q(3)});
  ASSERT_TRUE(pw.has_value());
  EXPECT_EQ(pw->k, 0);
  EXPECT_EQ(pw->p, UniPoly({q(1)}));
  EXPECT_EQ(default_degree_bound(3), 6);
  EXPECT_FALSE(pointwise_min_poly(lie_seq("heisenberg3"), QVector{q(1), q(2), q(3)}, 1).has_value());
}

TEST(Solver, HeisenbergDegreeIsSeedIndependent) {
  const auto seq = lie_seq("heisenberg3");
  const PolyLambda expected = PolyLambda::monic(3, {MultiPoly(3), norm2(3), MultiPoly(3)});
  for (std::uint64_t seed : {1ULL, 42ULL, 12345ULL}) {
    const auto deg = generic_degree(seq, std::nullopt, seed, 64);
    EXPECT_FALSE(deg.bound_exceeded);
    EXPECT_EQ(deg.k, 3);
    EXPECT_TRUE(jets_independent_at(seq, deg.witness, 3));
    const auto coeffs = solve_coefficients(seq, 3, seed);
    EXPECT_EQ(PolyLambda::monic(3, coeffs), expected) << "seed " << seed;
  }
}

TEST(Solver, ExactAndSampledVerification) {
  const auto seq = lie_seq("heisenberg3");
  const PolyLambda good = PolyLambda::monic(3, {MultiPoly(3), norm2(3), MultiPoly(3)});
  const QVector w{q(1), q(2), q(3)};
  const auto exact = verify_exact(seq, good, w);
  EXPECT_TRUE(exact.ok());
  EXPECT_TRUE(exact.result.verified);
  const auto sampled = verify_sampled(seq, good, w, 9, 16);
  EXPECT_TRUE(sampled.ok());
  EXPECT_FALSE(sampled.result.verified);

  const PolyLambda wrong = PolyLambda::monic(3, {MultiPoly(3), norm2(3) * q(2), MultiPoly(3)});
  EXPECT_EQ(verify_exact(seq, wrong, w).status, Verification::Status::residual_nonzero);
  EXPECT_EQ(verify_sampled(seq, wrong, w, 9, 16).status, Verification::Status::residual_nonzero);
  // Along the center the jets below degree 3 are dependent.
  EXPECT_EQ(verify_exact(seq, good, QVector{q(0), q(0), q(1)}).status, Verification::Status::witness_dependent);
}

TEST(Solver, OutcomeStatuses) {
  const auto flat = compute_min_poly(lie_seq("flat_3"));
  ASSERT_EQ(flat.status, SolveOutcome::Status::verified);
  EXPECT_EQ(flat.min_poly->degree(), 0);

  const auto su2 = compute_min_poly(lie_seq("su2_biinvariant"));
  ASSERT_EQ(su2.status, SolveOutcome::Status::verified);
  EXPECT_EQ(su2.min_poly->p, PolyLambda::lambda_power(3, 1));

  SolveOptions tight;
  tight.max_k = 1;
  EXPECT_EQ(compute_min_poly(lie_seq("heisenberg3"), tight).status, SolveOutcome::Status::bound_exceeded);

  const auto rational = compute_min_poly(diagonal_sequence(2));
  EXPECT_EQ(rational.status, SolveOutcome::Status::rational_only);
}

TEST(RationalRelation, DiagonalPowersMatchMinorExpansion) {
  const std::size_t n = 2;
  const auto rel = rational_relation(diagonal_sequence(1), 2);
  ASSERT_EQ(rel.k, 2);
  EXPECT_TRUE(rel.verified);
  // Nonzero rows (x1^2, x1^3, x1^4) and (x2^2, x2^3, x2^4); the kernel is
  // their cross product, built from 2x2 minors.
  const MultiPoly a1 = pow(x(n, 0), 2), b1 = pow(x(n, 0), 3), c1 = pow(x(n, 0), 4);
  const MultiPoly a2 = pow(x(n, 1), 2), b2 = pow(x(n, 1), 3), c2 = pow(x(n, 1), 4);
  const MultiPoly v0 = oracle::minor2(b1, c1, b2, c2);
  const MultiPoly v1 = oracle::minor2(c1, a1, c2, a2);
  const MultiPoly v2 = oracle::minor2(a1, b1, a2, b2);
  EXPECT_EQ(rel.a[0], RationalFunction(v1, v2));
  EXPECT_EQ(rel.a[1], RationalFunction(v0, v2));
  // Those quotients reduce to -(x1 + x2) and x1*x2.
  EXPECT_TRUE(rel.polynomial());
  EXPECT_EQ(rel.a[0], RationalFunction(-(x(n, 0) + x(n, 1))));
  EXPECT_EQ(rel.a[1], RationalFunction(x(n, 0) * x(n, 1)));
}

TEST(RationalRelation, DiagonalPowersHavePolynomialCoefficients) {
  const auto coeffs = solve_coefficients(diagonal_sequence(1), 2, 42);
  ASSERT_EQ(coeffs.size(), 2u);
  EXPECT_EQ(coeffs[0], -(x(2, 0) + x(2, 1)));
  EXPECT_EQ(coeffs[1], x(2, 0) * x(2, 1));
}

TEST(RationalRelation, SkewedDiagonalIsGenuinelyRational) {
  const std::size_t n = 2;
  const auto seq = diagonal_sequence(2);
  const auto rel = rational_relation(seq, 2);
  EXPECT_TRUE(rel.verified);
  EXPECT_FALSE(rel.polynomial());
  // x1^2 + a1 x1 + a2 = 0 and 2 x2^2 + a1 x2 + a2 = 0.
  const MultiPoly d = x(n, 0) - x(n, 1);
  EXPECT_EQ(rel.a[0], RationalFunction(q(2) * x(n, 1) * x(n, 1) - x(n, 0) * x(n, 0), d));
  EXPECT_EQ(rel.a[1], RationalFunction(x(n, 0) * x(n, 1) * (x(n, 0) - q(2) * x(n, 1)), d));
  try {
    solve_coefficients(seq, 2, 42);
    FAIL() << "expected NotPolynomialError";
  } catch (const NotPolynomialError& e) {
    EXPECT_NE(e.residual(), 0);
    EXPECT_EQ(e.point().size(), n);
  }
  EXPECT_THROW(rational_relation(seq, 1), ComputationError);
}

TEST(Diagnostics, RootStructureOfUnivariatePolynomials) {
  auto up = [](std::vector<long> c) {
    std::vector<Rational> v;
    for (long a : c) v.push_back(q(a));
    return UniPoly(v);
  };
  EXPECT_TRUE(root_structure(up({0, 1, 0, 1})).pure_imaginary_simple);      // l^3 + l
  EXPECT_TRUE(root_structure(up({4, 0, 5, 0, 1})).pure_imaginary_simple);   // (l^2+1)(l^2+4)
  EXPECT_FALSE(root_structure(up({0, -1, 0, 1})).pure_imaginary_simple);    // l^3 - l
  EXPECT_FALSE(root_structure(up({1, 0, 2, 0, 1})).pure_imaginary_simple);  // (l^2+1)^2
  EXPECT_FALSE(root_structure(up({0, 0, 1, 0, 1})).pure_imaginary_simple);  // l^2 (l^2+1)
  EXPECT_FALSE(root_structure(up({1, 1, 1})).pure_imaginary_simple);        // complex roots
  EXPECT_TRUE(root_structure(up({1})).pure_imaginary_simple);
  EXPECT_TRUE(root_structure(up({0, 1, 0, 1})).zero_root);
  EXPECT_FALSE(root_structure(up({1, 1, 1})).alternate_vanish);
  EXPECT_THROW(root_structure(up({0, 1}), false), UsageError);
}

TEST(Diagnostics, RicciConsistencyOnHeisenberg) {
  const auto seq = lie_seq("heisenberg3");
  const auto outcome = compute_min_poly(seq);
  ASSERT_TRUE(outcome.min_poly.has_value());
  const auto report = ricci_diagnostics(seq, *outcome.min_poly);
  EXPECT_TRUE(report.ricci_nonzero);
  EXPECT_TRUE(report.degree_odd);
  EXPECT_TRUE(report.last_coefficient_zero);
  EXPECT_TRUE(report.consistent);
  for (bool z : report.trace_zero) EXPECT_TRUE(z);
}

TEST(Diagnostics, DivisionByMinimalPolynomial) {
  oracle::Random rng(59);
  const auto seq = lie_seq("heisenberg3");
  const auto mp = *compute_min_poly(seq).min_poly;
  const PolyLambda quotient = PolyLambda::monic(3, {rng.homogeneous(3, 1, 2)});
  const auto report = divides(seq, quotient * mp.p, mp);
  EXPECT_TRUE(report.divisible);
  EXPECT_EQ(report.quotient, quotient);
  EXPECT_TRUE(report.remainder.is_zero());
  EXPECT_THROW(divides(seq, PolyLambda::lambda_power(3, 4), mp), UsageError);
  EXPECT_TRUE(unipoly_divides(UniPoly({q(1), q(1)}), UniPoly({q(-1), q(0), q(1)})));
  EXPECT_FALSE(unipoly_divides(UniPoly({q(2), q(1)}), UniPoly({q(-1), q(0), q(1)})));
}

TEST(C0Witness, SkewBasisAndHeisenbergSolutions) {
  const QMatrix g = QMatrix::from_rows(3, 3, {q(1), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(4)});
  const auto basis = skew_basis(g);
  EXPECT_EQ(basis.size(), 3u);
  for (const auto& b : basis) EXPECT_TRUE(is_metric_skew(g, b));
  EXPECT_FALSE(is_metric_skew(g, QMatrix::identity(3)));

  oracle::Random rng(61);
  const auto seq = lie_seq("heisenberg3");
  for (int trial = 0; trial < 5; ++trial) {
    const QVector pt = rng.nonzero_vector(3);
    const auto w = c0_witness(seq, pt, 3);
    ASSERT_TRUE(w.feasible);
    EXPECT_TRUE(is_metric_skew(seq.metric(), w.c));
    EXPECT_GE(commutator_orders(seq, pt, w.c, 5), 3);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(commutator(w.c, seq.jet(i).evaluate(pt)), seq.jet(i + 1).evaluate(pt));
    }
  }
}

TEST(C0Witness, InfeasibleForNonGeneratedSequence) {
  // R^1 has nonzero trace, so it is no commutator.
  const std::size_t n = 2;
  PolyMatrix r0(2, n), r1(2, n);
  r0(0, 0) = x(n, 0) * x(n, 0);
  r1(0, 0) = pow(x(n, 0), 3);
  const auto seq = JetSequence::from_list("trace", QMatrix::identity(2), {r0, r1});
  EXPECT_FALSE(c0_witness(seq, QVector{q(1), q(1)}, 1).feasible);
}
