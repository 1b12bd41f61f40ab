#include <benchmark/benchmark.h>

#include "cmpoly/jets/jet_sequence.hpp"
#include "cmpoly/liegroup/catalog.hpp"
#include "cmpoly/minpoly/pointwise.hpp"
#include "cmpoly/minpoly/solver.hpp"

using namespace cmpoly;

namespace {

const char* kSpaces[] = {"heisenberg3", "su2_berger(2)", "heisenberg5"};

}  // namespace

static void BM_ComputeMinPoly(benchmark::State& state) {
  const auto pres = lie::catalog_from_spec(kSpaces[state.range(0)]);
  state.SetLabel(kSpaces[state.range(0)]);
  for (auto _ : state) {
    const auto seq = jets::JetSequence::from_lie(pres);  // cold cache each run
    benchmark::DoNotOptimize(minpoly::compute_min_poly(seq));
  }
}
BENCHMARK(BM_ComputeMinPoly)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_PointwiseWarm(benchmark::State& state) {
  const auto seq = jets::JetSequence::from_lie(lie::catalog_from_spec("heisenberg5"));
  const QVector x{1, -2, 3, 5, -7};
  minpoly::pointwise_min_poly(seq, x);
  for (auto _ : state) benchmark::DoNotOptimize(minpoly::pointwise_min_poly(seq, x));
}
BENCHMARK(BM_PointwiseWarm)->Unit(benchmark::kMicrosecond);
