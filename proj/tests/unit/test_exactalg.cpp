#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cmpoly/error.hpp"
#include "cmpoly/exactalg/bareiss.hpp"
#include "cmpoly/exactalg/interpolate.hpp"
#include "cmpoly/exactalg/linsolve.hpp"
#include "cmpoly/exactalg/multipoly.hpp"
#include "cmpoly/exactalg/poly_lambda.hpp"
#include "cmpoly/exactalg/poly_matrix.hpp"
#include "cmpoly/exactalg/rational_function.hpp"
#include "cmpoly/exactalg/unipoly.hpp"
#include "oracles.hpp"

using namespace cmpoly;

namespace {

MultiPoly var(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }

Rational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-7"), q(-7));
  EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("abc"), UsageError);
  EXPECT_THROW(make_rational(1, 0), UsageError);
}

TEST(MultiPoly, RenderingAndOrder) {
  const std::size_t n = 3;
  MultiPoly p = var(n, 0) * var(n, 0) + q(2, 3) * var(n, 0) * var(n, 1) - var(n, 2);
  EXPECT_EQ(p.to_string(), "x1^2 + 2/3*x1*x2 - x3");
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_FALSE(p.homogeneous_degree().has_value());
  EXPECT_EQ(MultiPoly(n).to_string(), "0");
  EXPECT_EQ(MultiPoly(n).total_degree(), -1);
}

TEST(MultiPoly, RingAxiomsOnRandomPolynomials) {
  oracle::Random rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly a = rng.poly(3, 3, 4);
    const MultiPoly b = rng.poly(3, 3, 4);
    const MultiPoly c = rng.poly(3, 2, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * MultiPoly::constant(3, 1), a);
  }
}

TEST(MultiPoly, EvaluationIsARingHomomorphism) {
  oracle::Random rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly a = rng.poly(4, 4, 5);
    const MultiPoly b = rng.poly(4, 3, 5);
    QVector x(4);
    for (auto& c : x) c = rng.rational();
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
    std::vector<double> xd;
    for (const auto& c : x) xd.push_back(c.get_d());
    EXPECT_NEAR(a.evaluate(std::span<const double>(xd)), a.evaluate(x).get_d(),
                1e-9 * (1 + std::abs(a.evaluate(x).get_d())));
  }
}

TEST(MultiPoly, ExactDivisionRoundTrip) {
  oracle::Random rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly a = rng.poly(3, 3, 4);
    MultiPoly b = rng.poly(3, 2, 3);
    if (b.is_zero()) continue;
    const auto quotient = exact_divide(a * b, b);
    ASSERT_TRUE(quotient.has_value());
    EXPECT_EQ(*quotient, a);
  }
  const std::size_t n = 2;
  EXPECT_FALSE(exact_divide(var(n, 0) * var(n, 0) + var(n, 1), var(n, 0)).has_value());
  EXPECT_THROW(exact_divide(var(n, 0), MultiPoly(n)), UsageError);
}

TEST(MultiPoly, DerivativeAndMonomials) {
  const std::size_t n = 2;
  const MultiPoly p = pow(var(n, 0), 3) * var(n, 1);
  EXPECT_EQ(p.derivative(0), q(3) * pow(var(n, 0), 2) * var(n, 1));
  for (std::size_t vars = 1; vars <= 5; ++vars) {
    for (unsigned d = 0; d <= 5; ++d) {
      EXPECT_EQ(monomials_of_degree(vars, d).size(), monomial_count(vars, d));
    }
  }
  EXPECT_EQ(monomial_count(3, 2), 6u);
  EXPECT_THROW(var(2, 0) + var(3, 0), UsageError);
}

TEST(Interpolation, RecoversRandomHomogeneousPolynomials) {
  oracle::Random rng(5);
  for (unsigned degree = 0; degree <= 4; ++degree) {
    const MultiPoly target = rng.homogeneous(3, degree, 5);
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < monomial_count(3, degree) + 8; ++i) {
      QVector x = rng.vector(3);
      samples.push_back({x, target.evaluate(x)});
    }
    EXPECT_EQ(interpolate_homogeneous(degree, 3, samples), target);
  }
}

TEST(Interpolation, ReportsInconsistentSamples) {
  oracle::Random rng(9);
  std::vector<Sample> samples;
  for (int i = 0; i < 12; ++i) {
    QVector x = rng.nonzero_vector(2);
    while (x[1] == 0) x = rng.nonzero_vector(2);
    samples.push_back({x, x[0] * x[0] * x[0] / x[1]});
  }
  try {
    interpolate_homogeneous(2, 2, samples);
    FAIL() << "expected not_polynomial";
  } catch (const InterpolationError& e) {
    EXPECT_EQ(e.kind(), InterpolationError::Kind::not_polynomial);
    EXPECT_NE(e.residual(), 0);
  }
  std::vector<Sample> too_few(samples.begin(), samples.begin() + 2);
  try {
    interpolate_homogeneous(2, 2, too_few);
    FAIL() << "expected insufficient_samples";
  } catch (const InterpolationError& e) {
    EXPECT_EQ(e.kind(), InterpolationError::Kind::insufficient_samples);
  }
}

TEST(LinearAlgebra, NullspaceAgreesWithNaiveElimination) {
  oracle::Random rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
    QMatrix m(rows, cols);
    std::vector<std::vector<Rational>> raw(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        // Sparse entries make rank deficiency common.
        const Rational v = rng.integer(0, 2) == 0 ? rng.rational(4) : Rational(0);
        m(r, c) = v;
        raw[r][c] = v;
      }
    }
    const auto basis = q_nullspace(m);
    EXPECT_EQ(basis.size(), cols - oracle::rank(raw));
    EXPECT_EQ(rank(m), oracle::rank(raw));
    for (const auto& v : basis) {
      for (const auto& entry : m.apply(v)) EXPECT_EQ(entry, 0);
    }
  }
}

TEST(LinearAlgebra, InverseDeterminantAndLeastNorm) {
  const QMatrix a = QMatrix::from_rows(3, 3, {q(2), q(1), q(0), q(1), q(3), q(1), q(0), q(1), q(4)});
  EXPECT_EQ(determinant(a), q(18));
  EXPECT_EQ(a * inverse(a), QMatrix::identity(3));
  EXPECT_TRUE(is_positive_definite(a));
  EXPECT_FALSE(is_positive_definite(QMatrix::from_rows(2, 2, {q(1), q(2), q(2), q(1)})));
  EXPECT_THROW(inverse(QMatrix(2, 2)), ComputationError);

  // x + y = 2 has least-norm solution (1, 1).
  const auto sol = solve_affine(QMatrix::from_rows(1, 2, {q(1), q(1)}), {q(2)});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(least_norm_member(*sol), (QVector{q(1), q(1)}));
  EXPECT_FALSE(solve_affine(QMatrix::from_rows(2, 1, {q(1), q(1)}), {q(1), q(2)}).has_value());
}

TEST(Bareiss, FindsPlantedPolynomialDependency) {
  oracle::Random rng(17);
  const std::size_t n = 2;
  for (int trial = 0; trial < 10; ++trial) {
    // Third column = p * first + s * second.
    const MultiPoly p = rng.poly(n, 2, 3);
    const MultiPoly s = rng.poly(n, 2, 3);
    PolyGrid m(4, std::vector<MultiPoly>(3, MultiPoly(n)));
    for (std::size_t r = 0; r < 4; ++r) {
      m[r][0] = rng.poly(n, 2, 3);
      m[r][1] = rng.poly(n, 2, 3);
      m[r][2] = p * m[r][0] + s * m[r][1];
    }
    const auto ns = bareiss_nullspace(m, n);
    ASSERT_EQ(ns.size(), 1u);
    for (std::size_t r = 0; r < 4; ++r) {
      RationalFunction sum(n);
      for (std::size_t c = 0; c < 3; ++c) sum = sum + RationalFunction(m[r][c]) * ns[0][c];
      EXPECT_TRUE(sum.is_zero());
    }
    // Normalized so the free column carries 1: coefficients are -p and -s.
    EXPECT_EQ(ns[0][0], RationalFunction(-p));
    EXPECT_EQ(ns[0][1], RationalFunction(-s));

    // The generic rank is seen at a random specialization.
    QVector x = rng.vector(n);
    QMatrix spec(4, 3);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 3; ++c) spec(r, c) = m[r][c].evaluate(x);
    EXPECT_LE(rank(spec), bareiss_echelon(m, n).rank());
  }
}

TEST(RationalFunction, FieldOperations) {
  const std::size_t n = 2;
  const MultiPoly a = var(n, 0) + var(n, 1);
  const MultiPoly b = var(n, 0) - q(2) * var(n, 1);
  const RationalFunction f(a, b);
  const RationalFunction g(b, a);
  EXPECT_EQ(f * g, RationalFunction(MultiPoly::constant(n, 1)));
  EXPECT_EQ(f + g, RationalFunction(a * a + b * b, a * b));
  EXPECT_FALSE(f.is_polynomial());
  EXPECT_TRUE(RationalFunction(a * b, b).is_polynomial());
  EXPECT_EQ(f.evaluate(QVector{q(3), q(1)}), q(4));
  EXPECT_FALSE(f.evaluate(QVector{q(2), q(1)}).has_value());
}

TEST(UniPoly, DivisionReconstructsDividend) {
  oracle::Random rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> ca(static_cast<std::size_t>(rng.integer(1, 7)));
    std::vector<Rational> cb(static_cast<std::size_t>(rng.integer(1, 4)));
    for (auto& c : ca) c = rng.rational();
    for (auto& c : cb) c = rng.rational();
    cb.back() = rng.nonzero_rational();
    const UniPoly a(ca), b(cb);
    const auto [quot, rem] = unipoly_divmod(a, b);
    EXPECT_EQ(quot * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
  EXPECT_THROW(unipoly_divmod(UniPoly({q(1)}), UniPoly()), UsageError);
}

TEST(UniPoly, GcdOfProducts) {
  const UniPoly x_plus_1({q(1), q(1)});
  const UniPoly x_minus_2({q(-2), q(1)});
  const UniPoly x2_plus_1({q(1), q(0), q(1)});
  EXPECT_EQ(gcd(x_plus_1 * x2_plus_1, x_plus_1 * x_minus_2), x_plus_1);
  EXPECT_EQ(gcd(x2_plus_1, x_minus_2), UniPoly({q(1)}));
}

TEST(UniPoly, SturmCountsMatchPlantedRoots) {
  oracle::Random rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    const auto count = rng.integer(1, 5);
    while (static_cast<long>(roots.size()) < count) {
      const Rational r = rng.rational(6);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    UniPoly p({q(1)});
    std::size_t neg = 0, pos = 0;
    for (const auto& r : roots) {
      p = p * UniPoly({-r, q(1)});
      if (r < 0) ++neg;
      if (r > 0) ++pos;
    }
    // An irreducible quadratic factor adds no real roots.
    p = p * UniPoly({q(3), q(1), q(1)});
    EXPECT_EQ(sturm_root_profile(p, RootRegion::all_reals).distinct_real_roots, roots.size());
    EXPECT_EQ(sturm_root_profile(p, RootRegion::negatives).distinct_real_roots, neg);
    EXPECT_EQ(sturm_root_profile(p, RootRegion::positives).distinct_real_roots, pos);
    EXPECT_TRUE(sturm_root_profile(p, RootRegion::all_reals).all_simple);
    const UniPoly doubled = p * UniPoly({-roots.front(), q(1)});
    EXPECT_FALSE(sturm_root_profile(doubled, RootRegion::all_reals).all_simple);
    EXPECT_EQ(sturm_root_profile(doubled, RootRegion::all_reals).distinct_real_roots, roots.size());
  }
  EXPECT_THROW(sturm_root_profile(UniPoly(), RootRegion::all_reals), UsageError);
}

TEST(PolyLambda, DivisionAndSpecialization) {
  oracle::Random rng(29);
  const std::size_t n = 3;
  const MultiPoly norm = var(n, 0) * var(n, 0) + var(n, 1) * var(n, 1) + var(n, 2) * var(n, 2);
  const PolyLambda p = PolyLambda::monic(n, {MultiPoly(n), norm, MultiPoly(n)});
  EXPECT_EQ(p.to_string(), "lambda^3 + (x1^2 + x2^2 + x3^2)*lambda");
  EXPECT_FALSE(p.first_inhomogeneous().has_value());
  for (int trial = 0; trial < 10; ++trial) {
    const PolyLambda quotient = PolyLambda::monic(n, {rng.homogeneous(n, 1, 2), rng.homogeneous(n, 2, 3)});
    const PolyLambda product = quotient * p;
    const auto [qq, rem] = polylambda_divmod(product, p);
    EXPECT_EQ(qq, quotient);
    EXPECT_TRUE(rem.is_zero());
    const QVector x = rng.vector(n);
    EXPECT_EQ(product.specialize(x), quotient.specialize(x) * p.specialize(x));
  }
  const PolyLambda bad = PolyLambda::monic(n, {norm});
  EXPECT_EQ(bad.first_inhomogeneous(), std::optional<std::size_t>(1));
  EXPECT_THROW(polylambda_divmod(p, PolyLambda(n, {norm, norm})), UsageError);
}

TEST(PolyMatrix, DegreeDeclarationsAndCommutators) {
  const std::size_t n = 2;
  PolyMatrix a(2, n), b(2, n);
  a(0, 1) = var(n, 0);
  a(1, 0) = var(n, 1);
  b(0, 0) = var(n, 0);
  b(1, 1) = -var(n, 1);
  a.set_declared_degree(1);
  b.set_declared_degree(1);
  const PolyMatrix c = commutator(a, b);
  EXPECT_TRUE(c.trace().is_zero());
  EXPECT_EQ(c.declared_degree(), std::optional<int>(2));
  const QVector x{q(2), q(-3)};
  EXPECT_EQ(c.evaluate(x), commutator(a.evaluate(x), b.evaluate(x)));
  PolyMatrix mixed(2, n);
  mixed(0, 0) = var(n, 0) + var(n, 0) * var(n, 1);
  EXPECT_THROW(mixed.set_declared_degree(1), UsageError);
}
