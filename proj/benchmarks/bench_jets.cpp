#include <benchmark/benchmark.h>

#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/liegroup/connection.hpp"
#include "cmpoly/liegroup/curvature.hpp"

using namespace cmpoly;

static void BM_CurvatureLevels(benchmark::State& state) {
  const auto pres = lie::catalog_from_spec(state.range(0) == 3 ? "heisenberg3" : "heisenberg5");
  const auto conn = lie::koszul(pres);
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lie::curvature_derivatives(pres, conn, order));
}
BENCHMARK(BM_CurvatureLevels)->Args({3, 2})->Args({3, 4})->Args({5, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

static void BM_SymmetrizedJet(benchmark::State& state) {
  const auto pres = lie::catalog_from_spec("heisenberg5");
  const int order = static_cast<int>(state.range(0));
  const auto d = lie::curvature_derivatives(pres, lie::koszul(pres), order);
  for (auto _ : state) benchmark::DoNotOptimize(lie::symmetrized_jet(d, order));
}
BENCHMARK(BM_SymmetrizedJet)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_JetSequenceCold(benchmark::State& state) {
  const auto pres = lie::catalog_from_spec("su2_berger(2)");
  for (auto _ : state) {
    const auto seq = jets::JetSequence::from_lie(pres);
    benchmark::DoNotOptimize(&seq.jet(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_JetSequenceCold)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);
