#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sg/graphs.hpp"
#include "sg/max2sat.hpp"

namespace sg {

inline constexpr std::size_t kMaxCutOracleOrder = 26;
inline constexpr std::size_t kFccOracleOrder = 16;
inline constexpr std::size_t kMax2SatOracleVars = 26;

/// Enumeration result. Vertex 0 always sits on the +1 side; among optimal
/// assignments the one with the smallest mask (bit v set iff x_v = -1) wins.
struct CutResult {
  std::int64_t value = 0;
  std::vector<int> assignment;    // +-1 per vertex
  std::vector<Vertex> side;       // vertices with x_v = -1
};

/// Exact maxcut by Gray-code enumeration of the 2^(n-1) cuts.
/// Throws InputError when n > max_order.
CutResult maxcut_bruteforce(const Graph& g, std::size_t max_order = kMaxCutOracleOrder);

/// max sum_{E1} (1 - x_i x_j) + sum_{E2} (1 + x_i x_j) over +-1 vectors.
CutResult qp_bruteforce(const Graph& g1, const Graph& g2,
                        std::size_t max_order = kMaxCutOracleOrder);

struct CutCoverSolution {
  double value = 0.0;
  std::vector<std::uint32_t> cuts; // masks S (vertex 0 never in S) with y_S > 0
  std::vector<double> weights;     // y_S for each entry of `cuts`
  std::vector<double> covered;     // per edge of g.edges(): sum of y_S over cuts containing it
};

/// Fractional cut cover: min 1^T y s.t. every edge is covered by weight >= 1,
/// over all 2^(n-1) - 1 nontrivial cuts. Throws InputError when n > max_order.
CutCoverSolution fcc_lp(const Graph& g, std::size_t max_order = kFccOracleOrder);

struct SatResult {
  std::int64_t satisfied = 0;
  std::vector<bool> truth; // truth[v-1] = z_v; smallest mask among optima
};

SatResult max2sat_bruteforce(const Max2SatInstance& inst, std::size_t max_vars = kMax2SatOracleVars);

struct CombinatorialGauge {
  std::int64_t mc = 0;
  double fcc = 0.0;
  double product = 0.0;
  std::size_t edges = 0;
  bool holds = false;    // mc * fcc >= |E| - 1e-6
  bool equality = false; // |mc * fcc - |E|| <= 1e-6 |E|
};

CombinatorialGauge combinatorial_gauge_check(const Graph& g);

} // namespace sg
