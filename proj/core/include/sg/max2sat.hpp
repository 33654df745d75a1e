#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sg/bounds.hpp"
#include "sg/graphs.hpp"

namespace sg {

/// Literal +v is z_v, -v is the negation of z_v (v >= 1), DIMACS style.
using Literal = std::int32_t;

struct Max2SatInstance {
  std::size_t n_vars = 0;
  std::vector<std::vector<Literal>> clauses; // each of size 1 or 2

  /// Throws InputError when a clause is empty, longer than 2 literals or uses
  /// a variable outside 1..n_vars.
  void validate() const;
};

/// DIMACS CNF. Comment lines start with 'c'; a clause may span lines and ends
/// at 0. Throws ParseError (with the 1-based line number) on a malformed or
/// missing header, clause-count mismatch, clause longer than 2 literals, or
/// variable out of range.
Max2SatInstance parse_dimacs(std::string_view text);

/// Number of clauses satisfied by `truth` (truth[v-1] is z_v).
std::size_t count_satisfied(const Max2SatInstance& inst, const std::vector<bool>& truth);

/// sum alpha_ij (1 - x_i x_j) + sum beta_ij (1 + x_i x_j) + constant over
/// x_0..x_n, x_0 the reference variable (z_v true iff x_v = x_0). All
/// coefficients are integers in quarter units.
struct QuadraticForm {
  using Pair = std::pair<std::uint32_t, std::uint32_t>; // i < j
  std::size_t n_vars = 0;
  std::map<Pair, std::int64_t> alpha;
  std::map<Pair, std::int64_t> beta;
  std::int64_t constant = 0;

  std::size_t variables() const noexcept { return n_vars + 1; }
  double alpha_at(std::uint32_t i, std::uint32_t j) const;
  double beta_at(std::uint32_t i, std::uint32_t j) const;

  /// Value in quarter units at a +-1 vector of length n_vars + 1.
  std::int64_t evaluate_quarters(std::span<const int> x) const;
  double evaluate(std::span<const int> x) const { return evaluate_quarters(x) / 4.0; }
};

struct EncodingStats {
  std::size_t unit = 0;
  std::size_t binary = 0;
  std::size_t tautologies = 0;
  std::size_t duplicate_literals = 0; // (l v l) treated as the unit clause (l)
};

QuadraticForm encode(const Max2SatInstance& inst, EncodingStats* stats = nullptr);

/// Cancels alpha/beta on a shared pair: a(1 - p) + b(1 + p) =
/// |a - b|(1 -+ p) + 2 min(a, b).
QuadraticForm net_overlaps(const QuadraticForm& q);

struct GraphPair {
  Graph g1; // support of alpha
  Graph g2; // support of beta
  bool uniform = false; // every nonzero coefficient equals w
  double weight = 0.0;  // w in clause units
  std::vector<QuadraticForm::Pair> overlap; // pairs in both supports
};

GraphPair to_graph_pair(const QuadraticForm& q);

struct Max2SatOptions {
  bool oracle = true;
  std::size_t max_vars = 26;
};

struct Max2SatReport {
  std::size_t n_vars = 0;
  std::size_t clauses = 0;
  EncodingStats stats;
  QuadraticForm form;   // raw encoding
  GraphPair raw_pair;   // from the raw encoding
  QuadraticForm netted; // after net_overlaps
  GraphPair pair;       // from the netted form
  std::vector<std::uint32_t> active; // variables x_i with an edge, in order
  std::optional<BoundsReport> bounds; // on the graphs induced by `active`
  std::string bounds_note;
  std::optional<double> upper_bound; // constant + w * gamma
  std::optional<std::int64_t> optimum;
  std::vector<bool> optimum_assignment;
  std::optional<std::int64_t> qp; // of the reduced graph pair
  std::optional<double> sandwich_ratio; // qp / gamma
  std::string oracle_note;
};

/// Encodes, extracts the graph pair, detects a scheme through the coherent
/// closure and evaluates the bounds, plus the brute-force optimum when the
/// instance is small enough.
Max2SatReport bound_pipeline(const Max2SatInstance& inst, const Max2SatOptions& opts = {});

} // namespace sg
