// Acceptance criteria 1-10: one PASS/FAIL line each.
//
// Usage: sg_acceptance [--expect-fail=N[,M...]]
// Exit status is 0 when the set of failing criteria equals the expected set
// (empty by default), 1 otherwise.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sg/batch.hpp"
#include "sg/bounds.hpp"
#include "sg/coherent.hpp"
#include "sg/graphs.hpp"
#include "sg/linalg.hpp"
#include "sg/max2sat.hpp"
#include "sg/oracles.hpp"
#include "sg/report.hpp"
#include "sg/rounding.hpp"
#include "sg/schemes.hpp"
#include "support.hpp"

using namespace sg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) {
        detail.clear();
      }
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (pass) {
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(double x) { return format_number(x); }

struct SchemeGraph {
  std::string name;
  Graph g;
  AssociationScheme s;
  std::size_t cls = 0; // class of the adjacency relation
};

SchemeGraph load(const std::string& name) {
  Graph g = named_graph(name);
  const Matrix seeds[] = {g.adjacency()};
  const auto cfg = coherent_closure(seeds);
  const std::size_t cls = class_decomposition(cfg, seeds[0])->front();
  return {name, std::move(g), scheme_from_configuration(cfg), cls};
}

std::vector<std::string> criterion_graphs() {
  std::vector<std::string> names{"petersen", "paley(9)", "hamming(2,3)", "hypercube(3)"};
  for (int n = 4; n <= 8; ++n) names.push_back("cycle(" + std::to_string(n) + ")");
  for (int n = 3; n <= 8; ++n) names.push_back("complete(" + std::to_string(n) + ")");
  return names;
}

// 1. eta * eta_dual = |E| from certificates and from LPs.
Outcome criterion1() {
  Outcome o;
  for (const auto& name : criterion_graphs()) {
    const auto sg = load(name);
    const double e = static_cast<double>(sg.g.size());
    const auto cert = eta_scheme(sg.s, sg.cls);
    const auto check = check_eta_certificates(sg.g.adjacency(), cert);
    o.require(check.ok(), name + ": certificate check failed");
    const double dual = eta_dual_scheme(sg.s, sg.cls).value;
    o.require(std::abs(cert.value * dual - e) <= 1e-6 * e,
              name + ": closed-form product " + fmt(cert.value * dual) + " != " + fmt(e));
    const std::size_t cls[] = {sg.cls};
    const double lp = eta_lp(sg.s, cls) * eta_dual_lp(sg.s, cls);
    o.require(std::abs(lp - e) <= 1e-6 * e, name + ": LP product " + fmt(lp) + " != " + fmt(e));
  }
  o.note(std::to_string(criterion_graphs().size()) + " graphs, certificates and LPs agree");
  return o;
}

// 2. eta_dual closed forms from independently computed spectra vs LP.
Outcome criterion2() {
  Outcome o;
  auto check = [&](const std::string& name, double expect) {
    const auto sg = load(name);
    const double k = static_cast<double>(sg.g.degree(0));
    const double formula = 2.0 * k / (k - lambda_min(sg.g.adjacency()));
    const std::size_t cls[] = {sg.cls};
    const double lp = eta_dual_lp(sg.s, cls);
    o.require(std::abs(formula - expect) <= 1e-7,
              name + ": formula " + fmt(formula) + " != " + fmt(expect));
    o.require(std::abs(lp - expect) <= 1e-7, name + ": LP " + fmt(lp) + " != " + fmt(expect));
  };
  check("petersen", 1.2);
  check("paley(9)", 4.0 / 3.0);
  for (int n = 3; n <= 8; ++n) {
    check("complete(" + std::to_string(n) + ")", 2.0 * (n - 1) / n);
  }
  o.note("petersen 1.2, paley(9) 4/3, complete(3..8) 2(n-1)/n");
  return o;
}

// 3. fcc / eta_dual within [1, 1/0.8785].
Outcome criterion3() {
  Outcome o;
  double lo = 1e9, hi = 0.0;
  for (const auto& name : criterion_graphs()) {
    const auto sg = load(name);
    if (sg.g.order() > 16) continue;
    const std::size_t cls[] = {sg.cls};
    const double ratio = fcc_lp(sg.g).value / eta_dual_lp(sg.s, cls);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    o.require(ratio >= 1.0 - 1e-6 && ratio <= 1.0 / 0.8785 + 1e-6,
              name + ": fcc/eta_dual = " + fmt(ratio));
  }
  o.note("fcc/eta_dual in [" + fmt(lo) + ", " + fmt(hi) + "]");
  return o;
}

// 4. The Paley(9) example.
Outcome criterion4() {
  Outcome o;
  const auto d = scheme_from_drg(paley_graph(9));
  const Matrix expect{{1, 4, 4}, {1, 1, -2}, {1, -2, 1}};
  o.require(max_abs_diff(d.scheme.P, expect) < 1e-9, "P differs from [[1,4,4],[1,1,-2],[1,-2,1]]");
  const double printed[] = {0.0, 0.5, 0.0, 0.0, 0.5, 0.25};
  const auto w = evaluate_gamma_dual_witness(d.scheme, 1, 2, printed);
  const auto lp = gamma_dual_lp(d.scheme, 1, 2);
  std::string opt;
  for (double x : lp.witness()) opt += (opt.empty() ? "" : ",") + fmt(x);
  o.require(w.feasible && std::abs(w.objective - 0.75) <= 1e-9,
            "vector (0,1/2,0,0,1/2,1/4) is infeasible for the dual LP (violation " +
                fmt(w.max_violation) + "; its entries sum to 1.25, the normalisation row needs 1;"
                " LP optimum " + fmt(lp.max_value) + " at (" + opt + "))");
  const auto g = gamma_scheme(d.scheme, 1, 2);
  o.require(std::abs(g.value - 49.5) <= 1e-9, "gamma = " + fmt(g.value));
  o.require(std::abs(36.0 / g.value - 8.0 / 11.0) <= 1e-9, "36/gamma = " + fmt(36.0 / g.value));
  const auto cls = gauge_classification(d.scheme, 1, 2);
  o.require(cls.kind() == "strict", "classification " + cls.kind());
  o.note("P, gamma = 49.5, 36/gamma = 8/11, strict, witness feasible with objective 3/4");
  return o;
}

// 5. Closed-form gamma_dual vs LP, argmin at index d.
Outcome criterion5() {
  Outcome o;
  const char* names[] = {"petersen", "cycle(5)", "cycle(6)", "cycle(7)", "cycle(8)",
                         "hamming(2,3)", "hypercube(3)", "paley(9)", "paley(13)"};
  std::size_t tested = 0;
  for (const char* name : names) {
    const Graph g = named_graph(name);
    if (diameter(g) < 2) continue;
    ++tested;
    const auto r = gamma_dual_drg(g);
    const double lp = gamma_dual_lp(r.drg.scheme, 1, 2).min_value;
    o.require(std::abs(r.value - lp) <= 1e-7,
              std::string(name) + ": closed form " + fmt(r.value) + " vs LP " + fmt(lp));
    for (double c : {0.0, 0.25, 0.5}) {
      const auto prof = gamma_dual_index_profile(r.drg.scheme.P, c);
      o.require(prof.argmin == r.drg.scheme.classes(),
                std::string(name) + ": argmin " + std::to_string(prof.argmin) + " at c = " + fmt(c));
    }
  }
  o.note(std::to_string(tested) + " distance-regular graphs");
  return o;
}

// 6. Weak gauge duality on 100 random graphs whose closures are schemes.
Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t tested = 0;
  std::size_t attempts = 0;
  while (tested < 100 && attempts < 5000) {
    ++attempts;
    Graph g;
    if (rng() % 3 == 0) {
      // Cayley graph on Z_2^k
      const std::size_t k = 3 + rng() % 2;
      const std::uint32_t size = 1u << k;
      std::vector<std::uint32_t> conn;
      for (std::uint32_t c = 1; c < size; ++c)
        if (rng() % 3 == 0) conn.push_back(c);
      g = Graph(size);
      for (std::uint32_t u = 0; u < size; ++u)
        for (std::uint32_t c : conn)
          if (u < (u ^ c)) g.add_edge(u, u ^ c);
    } else {
      const std::size_t n = 5 + rng() % 12;
      std::vector<std::size_t> steps;
      for (std::size_t s = 1; s <= n / 2; ++s)
        if (rng() % 2) steps.push_back(s);
      g = testing::circulant(n, steps);
    }
    if (g.size() == 0) continue;
    const Matrix seeds[] = {g.adjacency()};
    const auto cfg = coherent_closure(seeds);
    if (!cfg.flags().is_association_scheme()) continue;
    // second graph: a random union of the remaining classes
    const auto mine = *class_decomposition(cfg, seeds[0]);
    Graph g2(g.order());
    for (std::size_t c = 1; c < cfg.rank(); ++c) {
      if (std::find(mine.begin(), mine.end(), c) != mine.end() || rng() % 2) continue;
      const Matrix a = cfg.class_matrix(c);
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
          if (a(u, v) != 0.0) g2.add_edge(u, v);
    }
    const auto r = compute_bounds(g, &g2);
    if (!r.available) {
      o.require(false, "bounds unavailable on a scheme graph: " + r.reason);
      continue;
    }
    ++tested;
    const double e1 = static_cast<double>(r.edges1);
    const double e12 = static_cast<double>(r.edges1 + r.edges2);
    o.require(*r.eta_product >= e1 - 1e-6,
              to_graph6(g) + ": eta product " + fmt(*r.eta_product) + " < " + fmt(e1));
    o.require(*r.gamma_product >= e12 - 1e-6,
              to_graph6(g) + ": gamma product " + fmt(*r.gamma_product) + " < " + fmt(e12));
  }
  o.require(tested == 100, "only " + std::to_string(tested) + " scheme graphs generated");
  o.note(std::to_string(tested) + " graphs (circulants and Cayley graphs on Z_2^k)");
  return o;
}

// 7. Projection onto the Bose-Mesner algebra preserves feasibility and <L, .>.
Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  double worst_eig = 0.0;
  for (const char* name : {"petersen", "paley(9)"}) {
    const Graph g = named_graph(name);
    const Matrix seeds[] = {g.adjacency()};
    const auto cfg = coherent_closure(seeds);
    const Matrix L = laplacian(g);
    for (int t = 0; t < 200; ++t) {
      const std::size_t dim = 1 + rng() % g.order();
      const Matrix m = testing::random_correlation(rng, g.order(), dim);
      const Matrix p = project(cfg, m);
      const double eig = lambda_min(p);
      worst_eig = std::min(worst_eig, eig);
      o.require(eig >= -1e-8, std::string(name) + ": lambda_min " + fmt(eig));
      double diag = 0.0;
      for (std::size_t v = 0; v < g.order(); ++v) diag = std::max(diag, std::abs(p(v, v) - 1.0));
      o.require(diag <= 1e-10, std::string(name) + ": diagonal off by " + fmt(diag));
      const double dl = std::abs(inner(L, p) - inner(L, m));
      o.require(dl <= 1e-8, std::string(name) + ": <L, .> changed by " + fmt(dl));
    }
  }
  o.note("400 projections, min eigenvalue " + fmt(worst_eig));
  return o;
}

// 8. Oracle concordance.
Outcome criterion8() {
  Outcome o;
  o.require(maxcut_bruteforce(petersen_graph()).value == 12, "mc(petersen) != 12");
  o.require(maxcut_bruteforce(cycle_graph(5)).value == 4, "mc(cycle(5)) != 4");
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * std::generate_canonical<double, 53>(rng));
    const auto qp = qp_bruteforce(g, empty_graph(n)).value;
    const auto mc = maxcut_bruteforce(g).value;
    o.require(qp == 2 * mc, to_graph6(g) + ": qp " + std::to_string(qp) + " != 2 mc " + std::to_string(mc));
  }
  for (int t = 0; t < 100; ++t) {
    Max2SatInstance inst;
    inst.n_vars = 1 + rng() % 8;
    const std::size_t m = rng() % 21;
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<Literal> clause;
      for (std::size_t l = 0, len = 1 + rng() % 2; l < len; ++l) {
        const auto v = static_cast<Literal>(1 + rng() % inst.n_vars);
        clause.push_back(rng() % 2 ? v : -v);
      }
      inst.clauses.push_back(clause);
    }
    const auto q = encode(inst);
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q.variables()); ++mask) {
      best = std::max(best, q.evaluate_quarters(testing::signs_from_mask(q.variables(), mask)));
    }
    const auto sat = max2sat_bruteforce(inst).satisfied;
    o.require(best == 4 * sat, "instance " + std::to_string(t) + ": form max " +
                                   fmt(best / 4.0) + " != optimum " + std::to_string(sat));
  }
  o.note("mc values, 30 qp = 2 mc checks, 100 MAX 2-SAT instances");
  return o;
}

// 9. Hyperplane rounding on Petersen.
Outcome criterion9() {
  Outcome o;
  const Graph g = petersen_graph();
  const auto d = scheme_from_drg(g);
  const auto cert = eta_scheme(d.scheme, 1);
  const auto vectors = gram_factor(cert.M);
  const Matrix L = laplacian(g);
  std::string bests;
  bool found = false;
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto r = round_hyperplane(vectors, L, {}, 2000, seed);
    found = found || r.best_value == 12.0;
    bests += (bests.empty() ? "" : ",") + fmt(r.best_value);
  }
  o.require(found, "best cuts " + bests + ", none reached 12");
  const auto r = round_hyperplane(vectors, L, {}, 5000, 4);
  const double floor = 0.878 * 12.5 - 3.0 * r.std_error;
  o.require(r.mean >= floor, "mean " + fmt(r.mean) + " < " + fmt(floor));
  o.note("best cuts " + bests + "; mean " + fmt(r.mean) + " >= " + fmt(floor));
  return o;
}

std::string serialize(const std::vector<BatchRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) out << csv_line(batch_csv_row(r.index, r.report, r.status)) << '\n';
  return out.str();
}

// 10. Batch over the bundled corpus.
Outcome criterion10() {
  Outcome o;
  std::ifstream in(SG_CORPUS_PATH);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  o.require(!lines.empty() && lines.size() <= 30, "corpus missing or larger than 30 graphs");
  const auto serial = run_batch(lines, 1);
  const std::string first = serialize(serial);
  o.require(serialize(run_batch(lines, 4)) == first, "4-worker run differs from serial run");
  o.require(serialize(run_batch(lines, 1)) == first, "repeated run differs");

  const std::string pet = to_graph6(petersen_graph());
  const std::string p9 = to_graph6(paley_graph(9));
  bool saw_pet = false, saw_p9 = false;
  for (const auto& row : serial) {
    if (row.status != "ok") continue;
    // independent recomputation: LP gamma dual on the distance scheme
    const Graph g = parse_graph6(row.graph);
    const auto ref = gauge_classification(scheme_from_drg(g).scheme, 1, 2);
    o.require(ref.kind() == *row.report.classification,
              "row " + std::to_string(row.index) + ": " + *row.report.classification +
                  " vs LP recomputation " + ref.kind());
    if (row.graph == pet) saw_pet = *row.report.classification == "equality";
    if (row.graph == p9) saw_p9 = *row.report.classification == "strict";
  }
  o.require(saw_pet, "petersen not classified as equality");
  o.require(saw_p9, "paley(9) not classified as strict");
  const auto s = summarize(serial);
  o.note(std::to_string(s.rows) + " graphs: " + std::to_string(s.equality) + " equality, " +
         std::to_string(s.strict) + " strict, " + std::to_string(s.not_drg) + " not DRG, " +
         std::to_string(s.other) + " other; deterministic across 1 and 4 workers");
  return o;
}

} // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const char* prefix = "--expect-fail=";
    if (std::strncmp(argv[i], prefix, std::strlen(prefix)) != 0) {
      std::fprintf(stderr, "usage: %s [--expect-fail=N[,M...]]\n", argv[0]);
      return 2;
    }
    std::stringstream list(argv[i] + std::strlen(prefix));
    for (std::string item; std::getline(list, item, ',');) expected.insert(std::stoi(item));
  }
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8,
                                               criterion9, criterion10};
  std::set<int> failed;
  for (int i = 0; i < 10; ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) failed.insert(i + 1);
    std::printf("criterion %d: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  if (failed != expected) {
    std::printf("failing criteria differ from the expected set\n");
    return 1;
  }
  return 0;
}
