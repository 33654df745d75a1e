#include <doctest.h>

#include <limits>
#include <random>

#include "sg/bounds.hpp"
#include "sg/errors.hpp"
#include "sg/graphs.hpp"
#include "sg/oracles.hpp"
#include "sg/schemes.hpp"
#include "support.hpp"

using namespace sg;

namespace {

// Plain enumeration without incremental updates.
std::int64_t naive_cut(const Graph& g) {
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    std::int64_t c = 0;
    for (const auto& [u, v] : g.edges()) {
      c += ((mask >> u) ^ (mask >> v)) & 1u;
    }
    best = std::max(best, c);
  }
  return best;
}

std::int64_t naive_qp(const Graph& g1, const Graph& g2) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g1.order()); ++mask) {
    const auto x = testing::signs_from_mask(g1.order(), mask);
    std::int64_t v = 0;
    for (const auto& [a, b] : g1.edges()) v += 1 - x[a] * x[b];
    for (const auto& [a, b] : g2.edges()) v += 1 + x[a] * x[b];
    best = std::max(best, v);
  }
  return best;
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("maxcut examples") {
  CHECK(maxcut_bruteforce(complete_graph(4)).value == 4);
  CHECK(maxcut_bruteforce(petersen_graph()).value == 12);
  CHECK(maxcut_bruteforce(cycle_graph(5)).value == 4);
  CHECK(maxcut_bruteforce(Graph(1)).value == 0);
  CHECK(maxcut_bruteforce(Graph(0)).value == 0);
  CHECK_THROWS_AS(maxcut_bruteforce(empty_graph(27)), InputError);
  CHECK_NOTHROW(maxcut_bruteforce(empty_graph(20), 20));
}

TEST_CASE("maxcut cut attains the value and ties pick the smallest mask") {
  const Graph g = petersen_graph();
  const auto r = maxcut_bruteforce(g);
  CHECK(r.assignment[0] == 1);
  CHECK(static_cast<std::int64_t>(cut_edges(g, r.side).size()) == r.value);
  // C4: optimum {1, 3} is the smallest mask with x_0 = +1
  const auto c4 = maxcut_bruteforce(cycle_graph(4));
  CHECK(c4.side == std::vector<Vertex>{1, 3});
}

TEST_CASE("maxcut and qp against naive enumeration") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 11;
    const Graph g = testing::random_graph(rng, n, 0.5);
    const Graph h = testing::random_graph(rng, n, 0.3);
    CHECK(maxcut_bruteforce(g).value == naive_cut(g));
    CHECK(qp_bruteforce(g, empty_graph(n)).value == 2 * naive_cut(g));
    const auto q = qp_bruteforce(g, h);
    CHECK(q.value == naive_qp(g, h));
    std::int64_t v = 0;
    for (const auto& [a, b] : g.edges()) v += 1 - q.assignment[a] * q.assignment[b];
    for (const auto& [a, b] : h.edges()) v += 1 + q.assignment[a] * q.assignment[b];
    CHECK(v == q.value);
  }
}

TEST_CASE("qp examples") {
  CHECK(qp_bruteforce(complete_graph(2), complete_graph(2)).value == 2);
  const Graph p9 = paley_graph(9);
  Graph comp(9);
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v)
      if (!p9.adjacent(u, v)) comp.add_edge(u, v);
  CHECK(static_cast<double>(qp_bruteforce(p9, comp).value) <= 49.5);
  CHECK_THROWS_AS(qp_bruteforce(complete_graph(3), complete_graph(4)), InputError);
}

TEST_CASE("fractional cut cover") {
  CHECK(fcc_lp(complete_graph(2)).value == doctest::Approx(1.0));
  CHECK(fcc_lp(cycle_graph(4)).value == doctest::Approx(1.0));
  CHECK(fcc_lp(empty_graph(5)).value == 0.0);
  const auto pet = fcc_lp(petersen_graph());
  CHECK(pet.value >= 1.25 - 1e-9);
  CHECK(pet.value <= 1.2 / kAlphaGW + 1e-9);
  double total = 0.0;
  for (double w : pet.weights) {
    CHECK(w > 0.0);
    total += w;
  }
  CHECK(total == doctest::Approx(pet.value));
  for (double c : pet.covered) CHECK(c >= 1.0 - 1e-8);
  CHECK_THROWS_AS(fcc_lp(empty_graph(17)), InputError);
}

TEST_CASE("fcc sandwich around the gauge dual on scheme graphs") {
  for (const char* name : {"petersen", "cycle(5)", "cycle(6)", "cycle(8)", "complete(4)",
                           "complete(6)", "hamming(2,3)", "hypercube(3)", "paley(9)",
                           "paley(13)"}) {
    CAPTURE(name);
    const Graph g = named_graph(name);
    const auto r = compute_bounds(g, nullptr);
    REQUIRE(r.available);
    const double ratio = fcc_lp(g).value / *r.eta_dual;
    CHECK(ratio >= 1.0 - 1e-6);
    CHECK(ratio <= 1.0 / kAlphaGW + 1e-6);
    CHECK(static_cast<double>(maxcut_bruteforce(g).value) <= *r.eta + 1e-9);
  }
}

TEST_CASE("combinatorial gauge inequality") {
  const auto c6 = combinatorial_gauge_check(cycle_graph(6));
  CHECK(c6.mc == 6);
  CHECK(c6.fcc == doctest::Approx(1.0));
  CHECK(c6.equality);
  const auto pet = combinatorial_gauge_check(petersen_graph());
  CHECK(pet.holds);
  CHECK(pet.product >= 15.0 - 1e-6);
  const auto k5 = combinatorial_gauge_check(complete_graph(5));
  CHECK(k5.mc == 6);
  CHECK(k5.product >= 10.0 - 1e-6);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Graph g = testing::random_graph(rng, 2 + rng() % 8, 0.5);
    CHECK(combinatorial_gauge_check(g).holds);
  }
}

TEST_CASE("max2sat brute force examples") {
  Max2SatInstance a{1, {{1}, {-1}}};
  CHECK(max2sat_bruteforce(a).satisfied == 1);
  Max2SatInstance b{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}};
  CHECK(max2sat_bruteforce(b).satisfied == 3);
  Max2SatInstance sat{3, {{1, 2}, {-2, 3}, {-1, -3}, {3}}};
  const auto r = max2sat_bruteforce(sat);
  CHECK(r.satisfied == 4);
  CHECK(count_satisfied(sat, r.truth) == 4);
  Max2SatInstance three{3, {{1, 2, 3}}};
  CHECK_THROWS_AS(max2sat_bruteforce(three), InputError);
  CHECK(max2sat_bruteforce(Max2SatInstance{}).satisfied == 0);
}

}
