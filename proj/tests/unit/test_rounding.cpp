#include <doctest.h>

#include <cmath>

#include "sg/bounds.hpp"
#include "sg/errors.hpp"
#include "sg/graphs.hpp"
#include "sg/linalg.hpp"
#include "sg/oracles.hpp"
#include "sg/rounding.hpp"
#include "sg/schemes.hpp"

using namespace sg;

namespace {

double cut_value(const Graph& g, const std::vector<int>& x) {
  double v = 0.0;
  for (const auto& [a, b] : g.edges()) v += (1 - x[a] * x[b]) / 2.0;
  return v;
}

std::vector<std::vector<double>> optimal_vectors(const Graph& g) {
  const auto d = scheme_from_drg(g);
  return gram_factor(eta_scheme(d.scheme, 1).M);
}

} // namespace

TEST_SUITE("rounding") {

TEST_CASE("antipodal vectors always cut the edge") {
  const Graph k2 = complete_graph(2);
  const std::vector<std::vector<double>> v{{0.6, 0.8}, {-0.6, -0.8}};
  const auto r = round_hyperplane(v, laplacian(k2), {}, 100, 7);
  CHECK(r.best_value == 1.0);
  CHECK(r.mean == 1.0);
  CHECK(r.std_error == 0.0);
}

TEST_CASE("rounding is deterministic and the best assignment attains the best value") {
  const Graph g = petersen_graph();
  const auto v = optimal_vectors(g);
  const auto a = round_hyperplane(v, laplacian(g), {}, 300, 11);
  const auto b = round_hyperplane(v, laplacian(g), {}, 300, 11);
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_assignment == b.best_assignment);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(cut_value(g, a.best_assignment) == a.best_value);
  CHECK(a.best_value <= static_cast<double>(maxcut_bruteforce(g).value));
  const auto c = round_hyperplane(v, laplacian(g), {}, 300, 12);
  CHECK(c.mean != a.mean);
}

TEST_CASE("Petersen rounding finds the maximum cut") {
  const Graph g = petersen_graph();
  const auto v = optimal_vectors(g);
  bool found = false;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto r = round_hyperplane(v, laplacian(g), {}, 2000, seed);
    CHECK(r.best_value <= 12.0);
    found = found || r.best_value == 12.0;
  }
  CHECK(found);
}

TEST_CASE("expected value guarantee on C5") {
  const Graph g = cycle_graph(5);
  const auto d = scheme_from_drg(g);
  const auto cert = eta_scheme(d.scheme, 1);
  const auto r = round_hyperplane(gram_factor(cert.M), laplacian(g), {}, 5000, 5);
  CHECK(r.mean >= kAlphaGW * cert.value - 3.0 * r.std_error);
  CHECK(r.best_value <= 4.0);
}

TEST_CASE("qp objective with a second graph") {
  const Graph g1 = paley_graph(9);
  Graph g2(9);
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v)
      if (!g1.adjacent(u, v)) g2.add_edge(u, v);
  const auto d = scheme_from_drg(g1);
  const Matrix m = gamma_primal(d.scheme, 1, 2);
  const auto r = round_hyperplane(gram_factor(m), laplacian(g1), signless_laplacian(g2), 2000, 1);
  const auto qp = qp_bruteforce(g1, g2);
  CHECK(r.best_value <= static_cast<double>(qp.value));
  CHECK(r.mean >= kAlphaGW * 49.5 - 3.0 * r.std_error);
  double v = 0.0;
  for (const auto& [a, b] : g1.edges()) v += 1 - r.best_assignment[a] * r.best_assignment[b];
  for (const auto& [a, b] : g2.edges()) v += 1 + r.best_assignment[a] * r.best_assignment[b];
  CHECK(v == r.best_value);
}

TEST_CASE("input validation") {
  const Graph k2 = complete_graph(2);
  const std::vector<std::vector<double>> bad{{1.0, 0.0}, {0.5, 0.0}};
  CHECK_THROWS_AS(round_hyperplane(bad, laplacian(k2), {}, 10, 1), InputError);
  const std::vector<std::vector<double>> ok{{1.0, 0.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(round_hyperplane(ok, laplacian(k2), {}, 0, 1), InputError);
}

}
