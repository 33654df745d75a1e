#include "sg/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sg/linalg.hpp"

namespace sg {

using nlohmann::json;

double round_sig(double x) {
  if (!std::isfinite(x)) {
    return x;
  }
  const double r = std::strtod(format_number(x).c_str(), nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_number(double x) {
  if (x == 0.0) {
    return "0";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

namespace {

json num(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return round_sig(x);
}

template <typename T>
json opt(const std::optional<T>& v) {
  if (!v) {
    return nullptr;
  }
  if constexpr (std::is_floating_point_v<T>) {
    return num(*v);
  } else {
    return *v;
  }
}

json vec(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) {
    out.push_back(num(x));
  }
  return out;
}

} // namespace

json tolerances_json() {
  return {
      {"certificate", kCertificateTol},
      {"closed_form_vs_lp", kClosedFormTol},
      {"gauge_product_relative", kGaugeProductTol},
      {"span_residue", kSpanTol},
      {"psd", kDefaultPsdTol},
      {"significant_digits", kSignificantDigits},
  };
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (double x : m.row(r)) {
      row.push_back(num(x));
    }
    out.push_back(std::move(row));
  }
  return out;
}

json scheme_json(const AssociationScheme& s) {
  const auto& f = s.config.flags();
  json out;
  out["order"] = s.order();
  out["classes"] = s.classes();
  out["degrees"] = s.degrees;
  out["multiplicities"] = vec(s.multiplicities);
  out["P"] = matrix_json(s.P);
  out["Q"] = matrix_json(s.Q);
  out["flags"] = {{"homogeneous", f.homogeneous},
                  {"commutative", f.commutative},
                  {"symmetric", f.symmetric}};
  if (s.order() <= kColorMatrixLimit) {
    json colors = json::array();
    for (std::size_t x = 0; x < s.order(); ++x) {
      colors.push_back(std::vector<int>(s.config.colors().begin() + x * s.order(),
                                        s.config.colors().begin() + (x + 1) * s.order()));
    }
    out["colors"] = std::move(colors);
  }
  const auto orth = check_orthogonality(s);
  out["orthogonality_ok"] = orth.ok();
  return out;
}

json bounds_json(const BoundsReport& r) {
  json out;
  out["graph1"] = r.graph1;
  if (!r.graph2.empty()) {
    out["graph2"] = r.graph2;
  }
  out["n"] = r.order;
  out["edges1"] = r.edges1;
  out["edges2"] = r.edges2;
  out["available"] = r.available;
  if (!r.available) {
    out["reason"] = r.reason;
  }
  out["classes1"] = r.classes1;
  out["classes2"] = r.classes2;
  out["eta"] = opt(r.eta);
  out["eta_dual"] = opt(r.eta_dual);
  out["eta_product"] = opt(r.eta_product);
  out["eta_equality"] = opt(r.eta_equality);
  out["certificates_ok"] = r.certificates_ok;
  if (!r.graph2.empty()) {
    out["gamma"] = opt(r.gamma);
    out["gamma_dual"] = opt(r.gamma_dual);
    out["gamma_dual_method"] = r.gamma_dual_method.empty() ? json(nullptr) : json(r.gamma_dual_method);
    out["gamma_product"] = opt(r.gamma_product);
    out["gamma_gap"] = opt(r.gamma_gap);
    out["classification"] = opt(r.classification);
  }
  json oracle;
  if (r.mc) oracle["mc"] = *r.mc;
  if (r.fcc) oracle["fcc"] = num(*r.fcc);
  if (r.qp) oracle["qp"] = *r.qp;
  if (r.mc && r.fcc) {
    oracle["mc_fcc_product"] = num(static_cast<double>(*r.mc) * *r.fcc);
  }
  if (r.fcc && r.eta_dual) {
    oracle["fcc_over_eta_dual"] = num(*r.fcc / *r.eta_dual);
    oracle["fcc_over_eta_dual_max"] = num(1.0 / kAlphaGW);
  }
  if (r.qp && r.gamma) {
    oracle["qp_over_gamma"] = num(static_cast<double>(*r.qp) / *r.gamma);
  }
  if (!r.oracle_note.empty()) {
    oracle["oracle"] = r.oracle_note;
  }
  if (!oracle.is_null()) {
    out["oracles"] = std::move(oracle);
  }
  return out;
}

json rounding_json(const RoundingResult& r) {
  return {{"trials", r.trials},       {"seed", r.seed},
          {"best", num(r.best_value)}, {"assignment", r.best_assignment},
          {"mean", num(r.mean)},       {"std_error", num(r.std_error)}};
}

json max2sat_json(const Max2SatReport& r) {
  auto coeffs = [](const std::map<QuadraticForm::Pair, std::int64_t>& m) {
    json out = json::array();
    for (const auto& [p, w] : m) {
      out.push_back({p.first, p.second, num(static_cast<double>(w) / 4.0)});
    }
    return out;
  };
  json out;
  out["variables"] = r.n_vars;
  out["clauses"] = r.clauses;
  out["clause_stats"] = {{"unit", r.stats.unit},
                         {"binary", r.stats.binary},
                         {"tautologies", r.stats.tautologies},
                         {"duplicate_literals", r.stats.duplicate_literals}};
  out["encoding"] = {{"alpha", coeffs(r.form.alpha)},
                     {"beta", coeffs(r.form.beta)},
                     {"constant", num(static_cast<double>(r.form.constant) / 4.0)}};
  json overlap = json::array();
  for (const auto& p : r.raw_pair.overlap) {
    overlap.push_back({p.first, p.second});
  }
  out["overlap"] = std::move(overlap);
  out["netted"] = {{"alpha", coeffs(r.netted.alpha)},
                   {"beta", coeffs(r.netted.beta)},
                   {"constant", num(static_cast<double>(r.netted.constant) / 4.0)}};
  out["uniform"] = r.pair.uniform;
  out["weight"] = r.pair.uniform ? num(r.pair.weight) : json(nullptr);
  out["active_variables"] = r.active;
  if (r.bounds) {
    out["bounds"] = bounds_json(*r.bounds);
  }
  if (!r.bounds_note.empty()) {
    out["bounds_note"] = r.bounds_note;
  }
  out["upper_bound"] = opt(r.upper_bound);
  json oracle;
  if (r.optimum) {
    oracle["optimum"] = *r.optimum;
    oracle["assignment"] = r.optimum_assignment;
  }
  if (r.qp) oracle["qp"] = *r.qp;
  if (r.sandwich_ratio) {
    oracle["qp_over_gamma"] = num(*r.sandwich_ratio);
    oracle["sandwich_min"] = num(kAlphaGW);
    oracle["sandwich_ok"] = *r.sandwich_ratio >= kAlphaGW - 1e-9 && *r.sandwich_ratio <= 1.0 + 1e-9;
  }
  if (!r.oracle_note.empty()) oracle["oracle"] = r.oracle_note;
  out["oracles"] = std::move(oracle);
  return out;
}

std::vector<std::string> batch_csv_header() {
  return {"index", "graph", "n", "edges1", "edges2", "status", "eta", "eta_dual", "eta_product",
          "gamma", "gamma_dual", "gamma_dual_method", "gamma_product", "gap", "classification"};
}

std::vector<std::string> batch_csv_row(std::size_t index, const BoundsReport& r,
                                       std::string_view status) {
  auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  return {std::to_string(index),
          r.graph1,
          std::to_string(r.order),
          std::to_string(r.edges1),
          std::to_string(r.edges2),
          std::string(status),
          cell(r.eta),
          cell(r.eta_dual),
          cell(r.eta_product),
          cell(r.gamma),
          cell(r.gamma_dual),
          r.gamma_dual_method,
          cell(r.gamma_product),
          cell(r.gamma_gap),
          r.classification.value_or("")};
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    const auto& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      out += c;
      continue;
    }
    out += '"';
    for (char ch : c) {
      if (ch == '"') {
        out += '"';
      }
      out += ch;
    }
    out += '"';
  }
  return out;
}

} // namespace sg
