#include "sg/oracles.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sg/errors.hpp"
#include "sg/lp.hpp"

namespace sg {

namespace {

void check_order(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw InputError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                     std::to_string(limit));
  }
  if (n > 32) {
    throw InputError(std::string(what) + ": enumeration supports at most 32 vertices");
  }
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> out(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    out[u] |= 1u << v;
    out[v] |= 1u << u;
  }
  return out;
}

// Change in the number of cut edges when v switches sides, given the current
// side mask.
inline std::int64_t flip_delta(std::uint32_t nbrs, std::uint32_t side, std::uint32_t v) {
  const std::uint32_t same = (side >> v) & 1u ? nbrs & side : nbrs & ~side;
  const std::uint32_t other = nbrs & ~same;
  return std::popcount(same) - std::popcount(other);
}

// Maximizes w1 * cut(G1) - w2 * cut(G2) over masks with bit 0 clear.
CutResult enumerate(std::size_t n, const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b, std::int64_t offset,
                    std::int64_t scale) {
  CutResult out;
  std::uint32_t side = 0;
  std::int64_t value = 0; // cut(G1) - cut(G2)
  std::int64_t best = 0;
  std::uint32_t best_mask = 0;
  if (n > 1) {
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < count; ++step) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(step)) + 1;
      value += flip_delta(a[v], side, v);
      if (!b.empty()) {
        value -= flip_delta(b[v], side, v);
      }
      side ^= 1u << v;
      if (value > best || (value == best && side < best_mask)) {
        best = value;
        best_mask = side;
      }
    }
  }
  out.value = offset + scale * best;
  out.assignment.assign(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1u) {
      out.assignment[v] = -1;
      out.side.push_back(v);
    }
  }
  return out;
}

} // namespace

CutResult maxcut_bruteforce(const Graph& g, std::size_t max_order) {
  check_order(g.order(), max_order, "maxcut_bruteforce");
  return enumerate(g.order(), neighbor_masks(g), {}, 0, 1);
}

CutResult qp_bruteforce(const Graph& g1, const Graph& g2, std::size_t max_order) {
  if (g1.order() != g2.order()) {
    throw InputError("qp_bruteforce: graphs have different vertex sets (" +
                     std::to_string(g1.order()) + " vs " + std::to_string(g2.order()) + ")");
  }
  check_order(g1.order(), max_order, "qp_bruteforce");
  // sum_{E1}(1 - x_i x_j) = 2 cut1, sum_{E2}(1 + x_i x_j) = 2(|E2| - cut2)
  return enumerate(g1.order(), neighbor_masks(g1), neighbor_masks(g2),
                   2 * static_cast<std::int64_t>(g2.size()), 2);
}

CutCoverSolution fcc_lp(const Graph& g, std::size_t max_order) {
  check_order(g.order(), max_order, "fcc_lp");
  CutCoverSolution out;
  const auto edges = g.edges();
  if (edges.empty()) {
    return out;
  }
  const std::size_t n = g.order();
  const std::uint32_t count = 1u << (n - 1);
  lp::LinearProgram prog;
  prog.sense = lp::Sense::minimize;
  prog.objective.assign(count - 1, 1.0);
  for (const auto& [u, v] : edges) {
    std::vector<double> row(count - 1, 0.0);
    for (std::uint32_t s = 1; s < count; ++s) {
      const std::uint32_t mask = s << 1; // vertex 0 stays outside S
      if (((mask >> u) ^ (mask >> v)) & 1u) {
        row[s - 1] = 1.0;
      }
    }
    prog.add_constraint(std::move(row), lp::Relation::greater_equal, 1.0);
  }
  const auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal) {
    throw NumericError("fcc_lp: covering LP is " + std::string(lp::to_string(sol.status)));
  }
  out.value = sol.value;
  for (std::uint32_t s = 1; s < count; ++s) {
    if (sol.point[s - 1] > 0.0) {
      out.cuts.push_back(s << 1);
      out.weights.push_back(sol.point[s - 1]);
    }
  }
  out.covered.assign(edges.size(), 0.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t t = 0; t < out.cuts.size(); ++t) {
      if (((out.cuts[t] >> edges[e].first) ^ (out.cuts[t] >> edges[e].second)) & 1u) {
        out.covered[e] += out.weights[t];
      }
    }
  }
  return out;
}

SatResult max2sat_bruteforce(const Max2SatInstance& inst, std::size_t max_vars) {
  inst.validate();
  const std::size_t n = inst.n_vars;
  if (n > max_vars || n > 62) {
    throw InputError("max2sat_bruteforce: " + std::to_string(n) +
                     " variables exceeds the limit of " + std::to_string(max_vars));
  }
  const std::size_t m = inst.clauses.size();
  std::vector<std::vector<std::size_t>> touching(n + 1);
  for (std::size_t c = 0; c < m; ++c) {
    for (Literal l : inst.clauses[c]) {
      auto& list = touching[static_cast<std::size_t>(std::abs(l))];
      if (list.empty() || list.back() != c) {
        list.push_back(c);
      }
    }
  }
  std::uint64_t truth = 0; // bit v-1 = z_v
  auto satisfied = [&](std::size_t c) {
    for (Literal l : inst.clauses[c]) {
      const bool value = (truth >> (std::abs(l) - 1)) & 1u;
      if (value == (l > 0)) {
        return true;
      }
    }
    return false;
  };
  std::vector<char> sat(m);
  std::int64_t total = 0;
  for (std::size_t c = 0; c < m; ++c) {
    sat[c] = satisfied(c);
    total += sat[c];
  }
  std::int64_t best = total;
  std::uint64_t best_mask = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    truth ^= std::uint64_t{1} << bit;
    for (std::size_t c : touching[bit + 1]) {
      const char now = satisfied(c);
      total += now - sat[c];
      sat[c] = now;
    }
    if (total > best || (total == best && truth < best_mask)) {
      best = total;
      best_mask = truth;
    }
  }
  SatResult out;
  out.satisfied = best;
  out.truth.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    out.truth[v] = (best_mask >> v) & 1u;
  }
  return out;
}

CombinatorialGauge combinatorial_gauge_check(const Graph& g) {
  CombinatorialGauge out;
  out.mc = maxcut_bruteforce(g).value;
  out.fcc = fcc_lp(g).value;
  out.edges = g.size();
  out.product = static_cast<double>(out.mc) * out.fcc;
  const double e = static_cast<double>(out.edges);
  out.holds = out.product >= e - 1e-6;
  out.equality = std::abs(out.product - e) <= 1e-6 * std::max(1.0, e);
  return out;
}

} // namespace sg
