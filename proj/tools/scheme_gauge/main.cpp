#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sg/errors.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

void add_common(CLI::App* cmd, sgcli::CommonOptions& opt, bool oracle, bool rounding) {
  static const std::map<std::string, sgcli::Format> formats{
      {"json", sgcli::Format::json}, {"jsonl", sgcli::Format::jsonl}, {"csv", sgcli::Format::csv}};
  cmd->add_option("--format", opt.format, "Output format: json, jsonl or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  if (oracle) {
    cmd->add_flag("--oracle", opt.oracle, "Add brute-force/LP oracle values when small enough");
  }
  cmd->add_flag("--force", opt.force, "Lift the oracle size limits (with a warning)");
  if (rounding) {
    cmd->add_option("--round", opt.round_trials, "Hyperplane rounding trials");
    cmd->add_option("--seed", opt.seed, "Seed for hyperplane rounding");
  }
  cmd->add_flag("--timing", opt.timing, "Add wall-clock timing (output is no longer byte-stable)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral gauge bounds for maxcut and MAX 2-SAT on association schemes",
               "scheme_gauge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "scheme_gauge 0.1.0");

  sgcli::CommonOptions opt;
  std::string graph;
  std::string second;
  std::string path;

  auto* analyze = app.add_subcommand("analyze", "Closure, scheme, eta and eta-dual of one graph");
  analyze->add_option("--graph", graph, "Named graph, graph6 string or graph6 file")->required();
  add_common(analyze, opt, true, true);

  auto* gamma = app.add_subcommand("gamma", "Quadratic-program bounds for a pair of graphs");
  gamma->add_option("--graph", graph, "Named graph, graph6 string or graph6 file")->required();
  gamma->add_option("--second", second,
                    "complement, dist2, or a named graph / graph6 string / file")
      ->required();
  add_common(gamma, opt, true, true);

  auto* max2sat = app.add_subcommand("max2sat", "MAX 2-SAT encoding and bounds from DIMACS CNF");
  max2sat->add_option("file", path, "DIMACS CNF file")->required();
  add_common(max2sat, opt, false, true);

  auto* batch = app.add_subcommand(
      "batch", "One row per graph6 line, each graph paired with its distance-2 graph");
  batch->add_option("file", path, "File with one graph6 string per line")->required();
  add_common(batch, opt, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) {
      sgcli::emit(sgcli::cmd_analyze(graph, opt), opt.format, std::cout);
    } else if (*gamma) {
      sgcli::emit(sgcli::cmd_gamma(graph, second, opt), opt.format, std::cout);
    } else if (*max2sat) {
      sgcli::emit(sgcli::cmd_max2sat(path, opt), opt.format, std::cout);
    } else if (*batch) {
      sgcli::cmd_batch(path, sgcli::threads_from_env(), opt, std::cout, std::cerr);
    }
  } catch (const sg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
