#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sg/bounds.hpp"

namespace sg {

/// One graph of a batch, compared against its distance-2 graph.
struct BatchRow {
  std::size_t index = 0; // 1-based line number in the input
  std::string graph;     // graph6 text as given
  std::string status;    // "ok", "not DRG", "diameter < 2" or "error: <message>"
  BoundsReport report;   // bounds for the pair when "ok", for the graph alone otherwise
};

struct BatchSummary {
  std::size_t rows = 0;
  std::size_t equality = 0;
  std::size_t strict = 0;
  std::size_t not_drg = 0;
  std::size_t other = 0; // diameter < 2 or unavailable bounds
  std::size_t errors = 0;
};

/// Evaluates one graph6 line. Never throws for bad input; failures land in
/// `status`.
BatchRow analyze_batch_line(std::size_t index, std::string_view line);

/// Evaluates every non-blank line of `lines` on up to `threads` workers.
/// Rows come back in input order regardless of the worker count.
std::vector<BatchRow> run_batch(std::span<const std::string> lines, std::size_t threads);

BatchSummary summarize(std::span<const BatchRow> rows);

} // namespace sg
