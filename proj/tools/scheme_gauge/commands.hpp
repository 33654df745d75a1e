#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace sgcli {

enum class Format { json, jsonl, csv };

struct CommonOptions {
  Format format = Format::json;
  bool oracle = false;
  bool force = false;
  std::size_t round_trials = 0; // 0: no rounding
  std::uint64_t seed = 1;
  bool timing = false;
};

nlohmann::json cmd_analyze(const std::string& graph, const CommonOptions& opt);
nlohmann::json cmd_gamma(const std::string& graph, const std::string& second,
                         const CommonOptions& opt);
nlohmann::json cmd_max2sat(const std::string& path, const CommonOptions& opt);

/// Streams the batch report to `out` (and the CSV summary to `err`).
void cmd_batch(const std::string& path, std::size_t threads, const CommonOptions& opt,
               std::ostream& out, std::ostream& err);

/// Worker count from SCHEME_GAUGE_THREADS, defaulting to the hardware
/// concurrency. Throws sg::InputError on a malformed value.
std::size_t threads_from_env();

/// Prints a single document in the requested format.
void emit(const nlohmann::json& doc, Format format, std::ostream& out);

} // namespace sgcli
