#include "sg/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "sg/errors.hpp"
#include "sg/graphs.hpp"
#include "sg/schemes.hpp"

namespace sg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

} // namespace

BatchRow analyze_batch_line(std::size_t index, std::string_view line) {
  BatchRow row;
  row.index = index;
  row.graph = std::string(trim(line));
  row.report.graph1 = row.graph;
  try {
    const Graph g = parse_graph6(row.graph);
    row.report.order = g.order();
    row.report.edges1 = g.size();
    if (!intersection_array(g)) {
      row.status = "not DRG";
      row.report = compute_bounds(g, nullptr, row.graph);
    } else if (diameter(g) < 2) {
      row.status = "diameter < 2";
      row.report = compute_bounds(g, nullptr, row.graph);
    } else {
      const Graph g2 = distance_graphs(g)[1];
      row.report = compute_bounds(g, &g2, row.graph, "dist2");
      row.status = row.report.available ? "ok" : "unavailable";
    }
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

std::vector<BatchRow> run_batch(std::span<const std::string> lines, std::size_t threads) {
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) {
      todo.push_back(i);
    }
  }
  std::vector<BatchRow> rows(todo.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < todo.size(); t = next++) {
      rows[t] = analyze_batch_line(todo[t] + 1, lines[todo[t]]);
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, todo.size()));
  if (workers == 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back(work);
  }
  pool.clear(); // joins
  return rows;
}

BatchSummary summarize(std::span<const BatchRow> rows) {
  BatchSummary s;
  s.rows = rows.size();
  for (const auto& r : rows) {
    if (r.status == "ok" && r.report.classification) {
      (*r.report.classification == "equality" ? s.equality : s.strict) += 1;
    } else if (r.status == "not DRG") {
      ++s.not_drg;
    } else if (r.status.starts_with("error")) {
      ++s.errors;
    } else {
      ++s.other;
    }
  }
  return s;
}

} // namespace sg
