#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sg/bounds.hpp"
#include "sg/coherent.hpp"
#include "sg/errors.hpp"
#include "sg/graphs.hpp"
#include "sg/linalg.hpp"
#include "sg/schemes.hpp"
#include "support.hpp"

using namespace sg;

namespace {

AssociationScheme drg(const char* name) { return scheme_from_drg(named_graph(name)).scheme; }

AssociationScheme closure_scheme(const Graph& g) {
  const Matrix seeds[] = {g.adjacency()};
  return scheme_from_configuration(coherent_closure(seeds));
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

bool close(double a, double b, double tol = 1e-7) { return std::abs(a - b) <= tol * (1 + std::abs(a)); }

const char* kDrgs[] = {"petersen", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)",
                       "hamming(2,3)", "hypercube(3)", "paley(9)", "paley(13)"};

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("eta closed forms and certificates") {
  const auto pet = drg("petersen");
  const auto c = eta_scheme(pet, 1);
  CHECK(c.value == doctest::Approx(12.5));
  CHECK(c.lambda_min == doctest::Approx(-2.0));
  CHECK(c.mu == doctest::Approx(1.2));
  const Graph pg = petersen_graph();
  for (const auto& [u, v] : pg.edges()) {
    CHECK(c.M(u, v) == doctest::Approx(-2.0 / 3.0));
  }
  CHECK(check_eta_certificates(pg.adjacency(), c).ok());

  for (std::size_t n = 3; n <= 8; ++n) {
    const auto s = closure_scheme(complete_graph(n));
    const auto cc = eta_scheme(s, 1);
    CHECK(cc.value == doctest::Approx(n * n / 4.0));
    CHECK(check_eta_certificates(complete_graph(n).adjacency(), cc).ok());
  }
  const double c5 = 1.25 * (2.0 - 2.0 * std::cos(4.0 * std::numbers::pi / 5.0));
  CHECK(eta_scheme(drg("cycle(5)"), 1).value == doctest::Approx(c5).epsilon(1e-12));
  CHECK(c5 == doctest::Approx(4.5225424859));
}

TEST_CASE("certificate checks reject broken certificates") {
  const auto pet = drg("petersen");
  const Matrix a = petersen_graph().adjacency();
  auto c = eta_scheme(pet, 1);
  auto bad = c;
  bad.M(0, 0) = 1.5;
  CHECK_FALSE(check_eta_certificates(a, bad).primal_ok);
  bad = c;
  for (double& v : bad.x) v *= 0.9;
  CHECK_FALSE(check_eta_certificates(a, bad).dual_ok);
  bad = c;
  bad.N *= 0.9;
  bad.mu *= 0.9;
  CHECK_FALSE(check_eta_certificates(a, bad).gauge_ok);
  bad = c;
  bad.value = 13.0;
  CHECK_FALSE(check_eta_certificates(a, bad).values_match);
}

TEST_CASE("eta dual values, witness and LP agreement") {
  const auto pet = eta_dual_scheme(drg("petersen"), 1);
  CHECK(pet.value == doctest::Approx(1.2));
  CHECK(close(pet.value, pet.lp_value));
  CHECK(pet.a == 0.0);
  CHECK(pet.b == doctest::Approx(0.6));
  CHECK(pet.witness_violation < 1e-9);
  CHECK(pet.witness_objective == doctest::Approx(1.2));
  for (double y : pet.y) CHECK(y >= -1e-12);

  const auto p9 = eta_dual_scheme(drg("paley(9)"), 1);
  CHECK(p9.value == doctest::Approx(4.0 / 3.0));
  CHECK(close(p9.value, p9.lp_value));
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = eta_dual_scheme(closure_scheme(complete_graph(n)), 1);
    CHECK(r.value == doctest::Approx(2.0 * (n - 1) / n));
    CHECK(close(r.value, r.lp_value));
  }
}

TEST_CASE("eta times eta dual equals the edge count on scheme graphs") {
  for (const char* name : kDrgs) {
    CAPTURE(name);
    const auto s = drg(name);
    const auto pc = eta_product_check(s, 1);
    CHECK(pc.equal);
    const std::size_t cls[] = {1};
    CHECK(close(eta_lp(s, cls), eta_scheme(s, 1).value));
    CHECK(close(eta_dual_lp(s, cls), eta_dual_scheme(s, 1).value));
    CHECK(check_eta_certificates(named_graph(name).adjacency(), eta_scheme(s, 1)).ok());
  }
  const auto c5 = eta_product_check(drg("cycle(5)"), 1);
  CHECK(c5.product == doctest::Approx(5.0));
}

TEST_CASE("scaling equivalence") {
  const auto pet = drg("petersen");
  const std::size_t cls[] = {1};
  const auto c = eta_scheme(pet, 1);
  auto r = scaling_equivalence_check(pet, cls, c.M, c.mu);
  CHECK(r.gauge_feasible);
  CHECK(r.primal_feasible);
  r = scaling_equivalence_check(pet, cls, Matrix::identity(10), 1.0);
  CHECK_FALSE(r.gauge_feasible);
  CHECK_FALSE(r.primal_feasible);
  r = scaling_equivalence_check(pet, cls, Matrix::identity(10), 2.0);
  CHECK(r.agree());

  const auto k2 = closure_scheme(complete_graph(2));
  r = scaling_equivalence_check(k2, cls, Matrix::ones(2), 1.0);
  CHECK_FALSE(r.gauge_feasible);
  CHECK_FALSE(r.primal_feasible);

  Matrix off = Matrix::identity(10);
  off(0, 1) = off(1, 0) = 0.5;
  CHECK_THROWS_AS(scaling_equivalence_check(pet, cls, off, 1.0), InputError);
  CHECK_THROWS_AS(scaling_equivalence_check(pet, cls, c.M, 0.0), InputError);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = project(pet.config, testing::random_correlation(rng, 10, 4));
    const double mu = 0.5 + 2.0 * std::generate_canonical<double, 53>(rng);
    CHECK(scaling_equivalence_check(pet, cls, m, mu).agree());
  }
}

TEST_CASE("gamma closed form, LP and witness") {
  const auto p9 = gamma_scheme(drg("paley(9)"), 1, 2);
  CHECK(p9.value == doctest::Approx(49.5));
  CHECK(close(p9.value, p9.lp_value));
  CHECK(36.0 / p9.value == doctest::Approx(8.0 / 11.0).epsilon(1e-12));
  CHECK(p9.witness_violation < 1e-9);
  for (double y : p9.y) CHECK(y >= 0.0);

  const auto pet = gamma_scheme(drg("petersen"), 1, 2);
  CHECK(pet.value == doctest::Approx(60.0));
  CHECK(close(pet.value, pet.lp_value));

  for (const char* name : kDrgs) {
    CAPTURE(name);
    const auto s = drg(name);
    for (std::size_t i1 = 1; i1 <= s.classes(); ++i1) {
      for (std::size_t i2 = 1; i2 <= s.classes(); ++i2) {
        if (i1 == i2) continue;
        const auto g = gamma_scheme(s, i1, i2);
        CHECK(close(g.value, g.lp_value));
        const std::size_t a[] = {i1};
        const std::size_t b[] = {i2};
        CHECK(close(g.value, gamma_lp(s, a, b)));
        const Matrix m = gamma_primal(s, i1, i2);
        for (std::size_t v = 0; v < m.rows(); ++v) CHECK(m(v, v) == doctest::Approx(1.0));
        CHECK(is_psd(m));
        // <(L1 + K2)/2, M> reaches gamma
        const Matrix a1 = s.class_matrix(i1);
        const Matrix a2 = s.class_matrix(i2);
        const double n = static_cast<double>(s.order());
        const double value =
            0.5 * (n * (s.degrees[i1] + s.degrees[i2]) - inner(a1, m) + inner(a2, m));
        CHECK(value == doctest::Approx(g.value));
      }
    }
  }
  CHECK_THROWS_AS(gamma_scheme(drg("petersen"), 0, 1), InputError);
}

TEST_CASE("gamma with an empty second graph is twice eta") {
  const auto k3 = closure_scheme(complete_graph(3));
  CHECK(gamma_with_empty_second(k3, 1) == doctest::Approx(4.5));
  const auto pet = drg("petersen");
  const std::size_t a[] = {1};
  CHECK(close(gamma_lp(pet, a, {}), 25.0));
}

TEST_CASE("gamma dual: closed form against LP") {
  for (const char* name : kDrgs) {
    CAPTURE(name);
    const auto r = gamma_dual_drg(named_graph(name));
    CHECK(close(r.value, r.lp_value));
    const auto lp = gamma_dual_lp(r.drg.scheme, 1, 2);
    CHECK(close(lp.min_value, lp.max_value));
    CHECK(close(lp.min_value, r.value));
    const auto w = evaluate_gamma_dual_witness(r.drg.scheme, 1, 2, lp.witness());
    CHECK(w.feasible);
    CHECK(close(w.objective, lp.max_value));
    for (double c : {0.0, 0.25, 0.5}) {
      const auto prof = gamma_dual_index_profile(r.drg.scheme.P, c);
      CHECK(prof.argmin == r.drg.scheme.classes());
    }
  }
  CHECK(gamma_dual_drg(paley_graph(9)).value == doctest::Approx(0.75));
  CHECK(gamma_dual_drg(paley_graph(9)).sign_term == doctest::Approx(-4.0));
  CHECK(gamma_dual_drg(petersen_graph()).value == doctest::Approx(0.75));
  CHECK(gamma_dual_drg(petersen_graph()).sign_term == doctest::Approx(-9.0));

  const auto c4 = gamma_dual_drg(hamming_graph(2, 2));
  CHECK(close(c4.value, gamma_dual_lp(c4.drg.scheme, 1, 2).min_value));

  CHECK_THROWS_AS(gamma_dual_drg(complete_graph(4)), InputError);
  CHECK_THROWS_AS(gamma_dual_drg(path_graph(4)), InputError);
}

TEST_CASE("Paley(9) dual witnesses") {
  const auto s = drg("paley(9)");
  const double printed[] = {0, 0.5, 0, 0, 0.5, 0.25};
  const auto bad = evaluate_gamma_dual_witness(s, 1, 2, printed);
  CHECK_FALSE(bad.feasible);
  const double good[] = {0, 0.25, 0, 0, 0.25, 0.5};
  const auto ok = evaluate_gamma_dual_witness(s, 1, 2, good);
  CHECK(ok.feasible);
  CHECK(ok.objective == doctest::Approx(0.75));
  const double wrong_size[] = {0, 1};
  CHECK_THROWS_AS(evaluate_gamma_dual_witness(s, 1, 2, wrong_size), InputError);
}

TEST_CASE("gauge classification") {
  const auto p9 = gauge_classification(drg("paley(9)"), 1, 2);
  CHECK(p9.product == doctest::Approx(37.125));
  CHECK(p9.kind() == "strict");
  const auto pet = gauge_classification(drg("petersen"), 1, 2);
  CHECK(pet.product == doctest::Approx(45.0));
  CHECK(pet.kind() == "equality");
  const auto h = drg("hamming(2,3)");
  const auto hc = gauge_classification(h, 1, 2);
  const auto lp = gamma_dual_lp(h, 1, 2);
  CHECK(hc.equality == (std::abs(hc.gamma * lp.min_value - hc.edges) <= 1e-6 * hc.edges));
  CHECK(classify_gauge(2.0, 2.0, 4.0).equality);
  CHECK_FALSE(classify_gauge(2.0, 2.1, 4.0).equality);
}

TEST_CASE("compute_bounds reports") {
  const Graph p9 = paley_graph(9);
  const Graph p9c = complement(p9);
  const auto r = compute_bounds(p9, &p9c, "paley(9)", "complement");
  REQUIRE(r.available);
  CHECK(*r.gamma == doctest::Approx(49.5));
  CHECK(*r.gamma_dual == doctest::Approx(0.75));
  CHECK(r.gamma_dual_method == "closed-form");
  CHECK(*r.classification == "strict");
  CHECK(r.certificates_ok);

  const auto single = compute_bounds(petersen_graph(), nullptr);
  CHECK(*single.eta == doctest::Approx(12.5));
  CHECK(*single.eta_dual == doctest::Approx(1.2));
  CHECK(*single.eta_equality);
  CHECK_FALSE(single.gamma.has_value());

  const auto path = compute_bounds(path_graph(4), nullptr);
  CHECK_FALSE(path.available);
  CHECK(path.reason.find("not an association scheme") != std::string::npos);

  const auto shared = compute_bounds(p9, &p9);
  CHECK_FALSE(shared.available);
  CHECK(shared.reason == "graphs share edges");

  const auto none = compute_bounds(empty_graph(4), nullptr);
  CHECK_FALSE(none.available);

  const Graph small(3);
  CHECK_THROWS_AS(compute_bounds(p9, &small), InputError);
}

TEST_CASE("weak gauge duality on random circulants") {
  std::mt19937_64 rng(41);
  int tested = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 9;
    std::vector<std::size_t> steps;
    for (std::size_t s = 1; s <= n / 2; ++s) {
      if (rng() % 2) steps.push_back(s);
    }
    if (steps.empty() || steps.size() == n / 2) continue;
    const Graph g = testing::circulant(n, steps);
    const Graph gc = complement(g);
    const auto r = compute_bounds(g, &gc);
    if (!r.available) continue;
    ++tested;
    CAPTURE(n);
    CHECK(*r.eta_product >= static_cast<double>(r.edges1) - 1e-6);
    CHECK(*r.gamma_product >= static_cast<double>(r.edges1 + r.edges2) - 1e-6);
  }
  CHECK(tested > 10);
}

}
