#include <benchmark/benchmark.h>

#include <random>

#include "sg/graphs.hpp"
#include "sg/oracles.hpp"

namespace {

sg::Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  sg::Graph g(n);
  for (sg::Vertex u = 0; u < n; ++u)
    for (sg::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_MaxCut(benchmark::State& state) {
  const sg::Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::maxcut_bruteforce(g));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (state.range(0) - 1)));
}
BENCHMARK(BM_MaxCut)->DenseRange(12, 24, 4)->Unit(benchmark::kMillisecond);

void BM_Qp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const sg::Graph g1 = random_graph(n, 2);
  const sg::Graph g2 = g1.complement();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::qp_bruteforce(g1, g2));
  }
}
BENCHMARK(BM_Qp)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_Max2Sat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  sg::Max2SatInstance inst;
  inst.n_vars = n;
  for (std::size_t c = 0; c < 4 * n; ++c) {
    const auto a = static_cast<sg::Literal>(1 + rng() % n);
    const auto b = static_cast<sg::Literal>(1 + rng() % n);
    inst.clauses.push_back({rng() % 2 ? a : -a, rng() % 2 ? b : -b});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sg::max2sat_bruteforce(inst));
  }
}
BENCHMARK(BM_Max2Sat)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

} // namespace
