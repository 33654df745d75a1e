#pragma once

#include <string>
#include <vector>

#include "sg/graphs.hpp"

namespace sgcli {

struct GraphSource {
  sg::Graph graph;
  std::string desc;   // as given on the command line
  std::string kind;   // "named", "file" or "graph6"
};

/// Resolves a named-graph description ("petersen", "paley(9)"), a path to a file
/// whose first non-blank line is graph6, or a literal graph6 string, in that
/// order. Throws sg::InputError when none applies.
GraphSource resolve_graph(const std::string& desc);

/// Whole file as text. Throws sg::InputError when it cannot be read.
std::string read_file(const std::string& path);

std::vector<std::string> read_lines(const std::string& path);

} // namespace sgcli
