#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "sg/batch.hpp"
#include "sg/bounds.hpp"
#include "sg/coherent.hpp"
#include "sg/errors.hpp"
#include "sg/graphs.hpp"
#include "sg/linalg.hpp"
#include "sg/max2sat.hpp"
#include "sg/oracles.hpp"
#include "sg/report.hpp"
#include "sg/rounding.hpp"
#include "sg/schemes.hpp"
#include "sources.hpp"

namespace sgcli {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

// Enumeration limit used once --force lifts the default gate.
constexpr std::size_t kForcedLimit = 32;

json header(std::string_view command) {
  json doc;
  doc["schema"] = sg::kReportSchema;
  doc["command"] = command;
  return doc;
}

void finish(json& doc, const CommonOptions& opt, Clock::time_point start) {
  doc["tolerances"] = sg::tolerances_json();
  if (opt.timing) {
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    doc["timing"] = {{"seconds", elapsed.count()}};
  }
}

// True when an oracle of the given size limit may run; warns when forced.
bool gate(std::size_t n, std::size_t limit, const char* what, const CommonOptions& opt) {
  if (n <= limit) {
    return true;
  }
  if (!opt.force) {
    return false;
  }
  std::cerr << "warning: running " << what << " on " << n << " vertices (default limit "
            << limit << ")\n";
  return true;
}

json graph_json(const sg::Graph& g) {
  json out;
  out["n"] = g.order();
  out["edges"] = g.size();
  out["graph6"] = sg::to_graph6(g);
  out["connected"] = sg::is_connected(g);
  const long k = g.regular_degree();
  out["regular_degree"] = k >= 0 ? json(k) : json(nullptr);
  const auto ia = sg::intersection_array(g);
  out["distance_regular"] = ia.has_value();
  out["intersection_array"] = ia ? json{{"b", ia->b}, {"c", ia->c}} : json(nullptr);
  try {
    const auto w = sg::walk_regularity(g);
    out["walk_regular"] = w.walk_regular;
    out["one_walk_regular"] = w.one_walk_regular;
  } catch (const sg::NumericError&) {
    out["walk_regular"] = nullptr;
    out["one_walk_regular"] = nullptr;
  }
  return out;
}

json closure_json(const sg::CoherentConfiguration& cfg) {
  const auto& f = cfg.flags();
  return {{"rank", cfg.rank()},
          {"fibers", cfg.fibers().size()},
          {"homogeneous", f.homogeneous},
          {"commutative", f.commutative},
          {"symmetric", f.symmetric},
          {"association_scheme", f.is_association_scheme()}};
}

// eigenvalues of exactly singular PSD matrices come out as +-1e-16 noise
// that varies with the platform; report anything below 1e-12 as 0
double clean_eig(double x) { return std::abs(x) <= 1e-12 ? 0.0 : sg::round_sig(x); }

json certificate_json(const sg::CertificateCheck& c) {
  return {{"primal_ok", c.primal_ok},
          {"dual_ok", c.dual_ok},
          {"gauge_ok", c.gauge_ok},
          {"values_match", c.values_match},
          {"primal_objective", sg::round_sig(c.primal_objective)},
          {"dual_objective", sg::round_sig(c.dual_objective)},
          {"primal_min_eigenvalue", clean_eig(c.primal_min_eig)},
          {"dual_min_eigenvalue", clean_eig(c.dual_min_eig)},
          {"gauge_min_eigenvalue", clean_eig(c.gauge_min_eig)},
          {"gauge_min_edge", sg::round_sig(c.gauge_min_edge)}};
}

const char* format_name(Format f) {
  switch (f) {
  case Format::json: return "json";
  case Format::jsonl: return "jsonl";
  case Format::csv: return "csv";
  }
  return "?";
}

void require_document_format(const CommonOptions& opt) {
  if (opt.format == Format::csv) {
    throw sg::InputError(std::string("--format ") + format_name(opt.format) +
                         " is only available for batch");
  }
}

std::optional<sg::AssociationScheme> scheme_of(const sg::CoherentConfiguration& cfg) {
  if (!cfg.flags().is_association_scheme()) {
    return std::nullopt;
  }
  return sg::scheme_from_configuration(cfg);
}

} // namespace

json cmd_analyze(const std::string& desc, const CommonOptions& opt) {
  require_document_format(opt);
  const auto start = Clock::now();
  const auto src = resolve_graph(desc);
  const sg::Graph& g = src.graph;
  json doc = header("analyze");
  doc["input"] = {{"graph", src.desc}, {"source", src.kind}};
  doc["graph"] = graph_json(g);

  const sg::Matrix seeds[] = {g.adjacency()};
  const auto cfg = sg::coherent_closure(seeds);
  json closure = closure_json(cfg);
  closure["membership"] = sg::Membership::kind_name(sg::membership(cfg, seeds[0]).kind);
  const auto classes = sg::class_decomposition(cfg, seeds[0]);
  closure["adjacency_classes"] = classes ? json(*classes) : json(nullptr);
  doc["closure"] = std::move(closure);

  const auto scheme = scheme_of(cfg);
  doc["scheme"] = scheme ? sg::scheme_json(*scheme) : json(nullptr);

  auto bounds = sg::compute_bounds(g, nullptr, src.desc);
  std::optional<sg::EtaCertificates> cert;
  if (scheme && classes && classes->size() == 1 && g.size() > 0) {
    cert = sg::eta_scheme(*scheme, classes->front());
    doc["certificates"] = certificate_json(sg::check_eta_certificates(seeds[0], *cert));
  } else {
    doc["certificates"] = nullptr;
  }

  if (opt.oracle) {
    const bool mc_ok = gate(g.order(), sg::kMaxCutOracleOrder, "maxcut", opt);
    const bool fcc_ok = gate(g.order(), sg::kFccOracleOrder, "fcc", opt);
    if (mc_ok) bounds.mc = sg::maxcut_bruteforce(g, kForcedLimit).value;
    if (fcc_ok) bounds.fcc = sg::fcc_lp(g, kForcedLimit).value;
    if (!mc_ok || !fcc_ok) bounds.oracle_note = "skipped (size)";
  }
  doc["bounds"] = sg::bounds_json(bounds);

  if (opt.round_trials > 0) {
    if (cert) {
      const auto r = sg::round_hyperplane(sg::gram_factor(cert->M), sg::laplacian(g), {},
                                          opt.round_trials, opt.seed);
      json rj = sg::rounding_json(r);
      rj["sdp_value"] = sg::round_sig(cert->value);
      rj["best_over_sdp"] = sg::round_sig(r.best_value / cert->value);
      doc["rounding"] = std::move(rj);
    } else {
      doc["rounding"] = {{"skipped", "no SDP solution: the graph is not one class of a scheme"}};
    }
  }
  finish(doc, opt, start);
  return doc;
}

json cmd_gamma(const std::string& desc, const std::string& second, const CommonOptions& opt) {
  require_document_format(opt);
  const auto start = Clock::now();
  const auto src = resolve_graph(desc);
  const sg::Graph& g1 = src.graph;
  sg::Graph g2;
  std::string second_kind;
  if (second == "complement") {
    g2 = g1.complement();
    second_kind = "complement";
  } else if (second == "dist2") {
    if (!sg::is_connected(g1) || sg::diameter(g1) < 2) {
      throw sg::InputError("--second dist2 needs a connected graph of diameter at least 2");
    }
    g2 = sg::distance_graphs(g1)[1];
    second_kind = "dist2";
  } else {
    auto s2 = resolve_graph(second);
    g2 = std::move(s2.graph);
    second_kind = s2.kind;
    if (g2.order() != g1.order()) {
      throw sg::InputError("second graph has " + std::to_string(g2.order()) +
                           " vertices, first has " + std::to_string(g1.order()));
    }
  }

  json doc = header("gamma");
  doc["input"] = {{"graph", src.desc}, {"source", src.kind}, {"second", second},
                  {"second_source", second_kind}};
  doc["graph"] = graph_json(g1);
  doc["second"] = {{"edges", g2.size()}, {"graph6", sg::to_graph6(g2)}};

  auto bounds = sg::compute_bounds(g1, &g2, src.desc, second);
  std::optional<sg::AssociationScheme> scheme;
  if (bounds.available) {
    const sg::Matrix seeds[] = {g1.adjacency(), g2.adjacency()};
    const auto cfg = sg::coherent_closure(seeds);
    doc["closure"] = closure_json(cfg);
    scheme = scheme_of(cfg);
  } else {
    doc["closure"] = nullptr;
  }
  doc["scheme"] = scheme ? sg::scheme_json(*scheme) : json(nullptr);

  if (opt.oracle) {
    if (gate(g1.order(), sg::kMaxCutOracleOrder, "qp", opt)) {
      bounds.qp = sg::qp_bruteforce(g1, g2, kForcedLimit).value;
    } else {
      bounds.oracle_note = "skipped (size)";
    }
  }
  doc["bounds"] = sg::bounds_json(bounds);

  if (opt.round_trials > 0) {
    if (scheme && bounds.classes1.size() == 1 && bounds.classes2.size() == 1) {
      const auto m = sg::gamma_primal(*scheme, bounds.classes1.front(), bounds.classes2.front());
      const auto r = sg::round_hyperplane(sg::gram_factor(m), sg::laplacian(g1),
                                          sg::signless_laplacian(g2), opt.round_trials, opt.seed);
      json rj = sg::rounding_json(r);
      rj["sdp_value"] = sg::round_sig(*bounds.gamma);
      rj["best_over_sdp"] = sg::round_sig(r.best_value / *bounds.gamma);
      doc["rounding"] = std::move(rj);
    } else {
      doc["rounding"] = {
          {"skipped", "no SDP solution: the graphs are not single classes of one scheme"}};
    }
  }
  finish(doc, opt, start);
  return doc;
}

json cmd_max2sat(const std::string& path, const CommonOptions& opt) {
  require_document_format(opt);
  const auto start = Clock::now();
  const auto inst = sg::parse_dimacs(read_file(path));
  sg::Max2SatOptions mopt;
  if (inst.n_vars > sg::kMax2SatOracleVars) {
    if (opt.force) {
      std::cerr << "warning: brute-forcing " << inst.n_vars << " variables (default limit "
                << sg::kMax2SatOracleVars << ")\n";
      mopt.max_vars = kForcedLimit;
    }
  }
  const auto rep = sg::bound_pipeline(inst, mopt);
  json doc = header("max2sat");
  doc["input"] = {{"file", path}};
  doc["report"] = sg::max2sat_json(rep);

  if (opt.round_trials > 0) {
    const auto& b = rep.bounds;
    if (b && b->available && b->classes1.size() == 1 && b->classes2.size() == 1) {
      // rebuild the reduced pair the bounds were computed on
      const auto keep = rep.active;
      sg::Graph g1(keep.size());
      sg::Graph g2(keep.size());
      for (sg::Vertex a = 0; a < keep.size(); ++a) {
        for (sg::Vertex c = a + 1; c < keep.size(); ++c) {
          if (rep.pair.g1.adjacent(keep[a], keep[c])) g1.add_edge(a, c);
          if (rep.pair.g2.adjacent(keep[a], keep[c])) g2.add_edge(a, c);
        }
      }
      const sg::Matrix seeds[] = {g1.adjacency(), g2.adjacency()};
      const auto s = sg::scheme_from_configuration(sg::coherent_closure(seeds));
      const auto m = sg::gamma_primal(s, b->classes1.front(), b->classes2.front());
      const auto r = sg::round_hyperplane(sg::gram_factor(m), sg::laplacian(g1),
                                          sg::signless_laplacian(g2), opt.round_trials, opt.seed);
      json rj = sg::rounding_json(r);
      const double constant = static_cast<double>(rep.netted.constant) / 4.0;
      rj["best_clauses"] = sg::round_sig(constant + rep.pair.weight * r.best_value);
      doc["rounding"] = std::move(rj);
    } else {
      doc["rounding"] = {{"skipped", "no SDP solution for this instance"}};
    }
  }
  finish(doc, opt, start);
  return doc;
}

std::size_t threads_from_env() {
  const char* env = std::getenv("SCHEME_GAUGE_THREADS");
  if (env == nullptr || *env == '\0') {
    return std::max(1u, std::thread::hardware_concurrency());
  }
  const std::string_view text(env);
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value == 0) {
    throw sg::InputError("SCHEME_GAUGE_THREADS must be a positive integer, got '" +
                         std::string(text) + "'");
  }
  return value;
}

void emit(const json& doc, Format format, std::ostream& out) {
  out << (format == Format::jsonl ? doc.dump() : doc.dump(2)) << '\n';
}

void cmd_batch(const std::string& path, std::size_t threads, const CommonOptions& opt,
               std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto lines = read_lines(path);
  const auto rows = sg::run_batch(lines, threads);
  const auto s = sg::summarize(rows);
  const json summary = {{"rows", s.rows},         {"equality", s.equality}, {"strict", s.strict},
                        {"not_drg", s.not_drg}, {"other", s.other},       {"errors", s.errors}};
  auto row_json = [](const sg::BatchRow& r) {
    json j = {{"index", r.index}, {"graph", r.graph}, {"status", r.status}};
    j["bounds"] = sg::bounds_json(r.report);
    return j;
  };
  switch (opt.format) {
  case Format::csv:
    out << sg::csv_line(sg::batch_csv_header()) << '\n';
    for (const auto& r : rows) {
      out << sg::csv_line(sg::batch_csv_row(r.index, r.report, r.status)) << '\n';
    }
    err << "summary: rows=" << s.rows << " equality=" << s.equality << " strict=" << s.strict
        << " not_drg=" << s.not_drg << " other=" << s.other << " errors=" << s.errors << '\n';
    break;
  case Format::jsonl:
    for (const auto& r : rows) {
      out << row_json(r).dump() << '\n';
    }
    out << json{{"summary", summary}}.dump() << '\n';
    break;
  case Format::json: {
    json doc = header("batch");
    doc["input"] = {{"file", path}};
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(row_json(r));
    }
    doc["rows"] = std::move(arr);
    doc["summary"] = summary;
    finish(doc, opt, start);
    emit(doc, Format::json, out);
    break;
  }
  }
}

} // namespace sgcli
