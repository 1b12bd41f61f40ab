#include <benchmark/benchmark.h>

#include <cmath>

#include "cmpoly/dynamics/crosscheck.hpp"
#include "cmpoly/dynamics/integrator.hpp"
#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/singer/singer.hpp"

using namespace cmpoly;

static void BM_GeodesicPath(benchmark::State& state) {
  const auto seq = jets::JetSequence::from_lie(lie::catalog_from_spec("heisenberg5"));
  const double s = 1.0 / std::sqrt(2.0);
  const dynamics::GeodesicFlow flow(*seq.presentation(), *seq.connection(), {s, 0, 0, 0, s},
                                    1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flow.path(1.0));
}
BENCHMARK(BM_GeodesicPath)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

static void BM_FiniteDifferenceJets(benchmark::State& state) {
  const auto seq = jets::JetSequence::from_lie(lie::catalog_from_spec("heisenberg3"));
  const auto d = seq.curvature(0);
  const double s = 1.0 / std::sqrt(2.0);
  const dynamics::GeodesicFlow flow(*seq.presentation(), *seq.connection(), {s, 0, s}, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::finite_difference_jets(flow, *d, 4, 1e-2));
}
BENCHMARK(BM_FiniteDifferenceJets)->Unit(benchmark::kMillisecond);

static void BM_SingerChain(benchmark::State& state) {
  const auto seq = jets::JetSequence::from_lie(lie::catalog_from_spec("heisenberg5"));
  const auto d = seq.curvature(4);
  for (auto _ : state) benchmark::DoNotOptimize(singer::singer_invariant(*d, 3, seq.metric()));
}
BENCHMARK(BM_SingerChain)->Unit(benchmark::kMillisecond);
