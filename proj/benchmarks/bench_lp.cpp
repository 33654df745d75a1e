#include <benchmark/benchmark.h>

#include "sg/bounds.hpp"
#include "sg/graphs.hpp"
#include "sg/oracles.hpp"
#include "sg/schemes.hpp"

namespace {

const char* kDrgs[] = {"petersen", "paley(13)", "hypercube(4)", "cycle(9)"};

void BM_GammaDualLp(benchmark::State& state) {
  const auto s = sg::scheme_from_drg(sg::named_graph(kDrgs[state.range(0)])).scheme;
  state.SetLabel(kDrgs[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::gamma_dual_lp(s, 1, 2));
  }
}
BENCHMARK(BM_GammaDualLp)->DenseRange(0, 3);

void BM_EtaDualLp(benchmark::State& state) {
  const auto s = sg::scheme_from_drg(sg::named_graph(kDrgs[state.range(0)])).scheme;
  const std::size_t cls[] = {1};
  state.SetLabel(kDrgs[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::eta_dual_lp(s, cls));
  }
}
BENCHMARK(BM_EtaDualLp)->DenseRange(0, 3);

// covering LP with 2^(n-1) - 1 columns
void BM_FccLp(benchmark::State& state) {
  const sg::Graph g = sg::cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::fcc_lp(g));
  }
}
BENCHMARK(BM_FccLp)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);

} // namespace
