#include <benchmark/benchmark.h>

#include <random>

#include "cmpoly/exactalg/bareiss.hpp"
#include "cmpoly/exactalg/interpolate.hpp"
#include "cmpoly/exactalg/multipoly.hpp"

using namespace cmpoly;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned degree, std::size_t terms) {
  MultiPoly p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    for (unsigned k = 0; k < degree; ++k) e[rng() % n] += 1;
    p.add_term(e, Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1));
  }
  return p;
}

}  // namespace

static void BM_MultiPolyProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const MultiPoly a = random_poly(rng, 5, 4, terms), b = random_poly(rng, 5, 4, terms);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiPolyProduct)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_BareissNullspace(benchmark::State& state) {
  // Rows of powers x_i^2..x_i^(c+1): a Vandermonde-like polynomial matrix.
  const auto cols = static_cast<std::size_t>(state.range(0));
  const std::size_t n = cols;
  PolyGrid m(n, std::vector<MultiPoly>(cols + 1, MultiPoly(n)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c <= cols; ++c) m[r][c] = pow(MultiPoly::variable(n, r), static_cast<unsigned>(c + 2));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_nullspace(m, n));
}
BENCHMARK(BM_BareissNullspace)->DenseRange(2, 4);

static void BM_InterpolateHomogeneous(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto degree = static_cast<unsigned>(state.range(0));
  const std::size_t n = 5;
  const MultiPoly target = random_poly(rng, n, degree, 12);
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < monomial_count(n, degree) + 8; ++i) {
    QVector x(n);
    for (auto& c : x) c = static_cast<long>(rng() % 19) - 9;
    samples.push_back({x, target.evaluate(x)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_homogeneous(degree, n, samples));
}
BENCHMARK(BM_InterpolateHomogeneous)->DenseRange(1, 4);
