#include <benchmark/benchmark.h>

#include "sg/coherent.hpp"
#include "sg/graphs.hpp"
#include "sg/schemes.hpp"

namespace {

const char* kGraphs[] = {"petersen", "paley(13)", "hypercube(4)", "hamming(3,3)", "paley(29)"};

void BM_CoherentClosure(benchmark::State& state) {
  const sg::Graph g = sg::named_graph(kGraphs[state.range(0)]);
  const sg::Matrix seeds[] = {g.adjacency()};
  state.SetLabel(kGraphs[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::coherent_closure(seeds));
  }
}
BENCHMARK(BM_CoherentClosure)->DenseRange(0, 4);

void BM_SchemeFromClosure(benchmark::State& state) {
  const sg::Graph g = sg::named_graph(kGraphs[state.range(0)]);
  const sg::Matrix seeds[] = {g.adjacency()};
  const auto cfg = sg::coherent_closure(seeds);
  state.SetLabel(kGraphs[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::scheme_from_configuration(cfg));
  }
}
BENCHMARK(BM_SchemeFromClosure)->DenseRange(0, 4);

} // namespace
