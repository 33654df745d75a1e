#include "sources.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include "sg/errors.hpp"

namespace sgcli {

namespace {

bool looks_named(std::string_view desc) {
  static constexpr std::array<std::string_view, 9> families{
      "cycle", "path", "complete", "empty", "complete_bipartite",
      "petersen", "paley", "hamming", "hypercube"};
  const auto family = desc.substr(0, desc.find('('));
  for (auto f : families) {
    if (family == f) {
      return true;
    }
  }
  return false;
}

} // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw sg::InputError("cannot open '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    lines.push_back(line);
  }
  return lines;
}

GraphSource resolve_graph(const std::string& desc) {
  if (looks_named(desc)) {
    return {sg::named_graph(desc), desc, "named"};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(desc, ec)) {
    for (const auto& line : read_lines(desc)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        try {
          return {sg::parse_graph6(line), desc, "file"};
        } catch (const sg::ParseError& e) {
          throw sg::InputError("'" + desc + "': " + e.what());
        }
      }
    }
    throw sg::InputError("'" + desc + "' contains no graph");
  }
  try {
    return {sg::parse_graph6(desc), desc, "graph6"};
  } catch (const sg::ParseError& e) {
    throw sg::InputError("cannot resolve graph '" + desc +
                         "': not a named graph or a file, and not valid graph6 (" + e.what() +
                         ")");
  }
}

} // namespace sgcli
