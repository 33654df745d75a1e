#include "sg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sg/coherent.hpp"
#include "sg/errors.hpp"
#include "sg/linalg.hpp"
#include "sg/lp.hpp"

namespace sg {

namespace {

void require_class(const AssociationScheme& s, std::size_t i, const char* what) {
  if (i == 0 || i > s.classes()) {
    throw InputError(std::string(what) + ": class index " + std::to_string(i) +
                     " is not a nontrivial class (1.." + std::to_string(s.classes()) + ")");
  }
}

void require_classes(const AssociationScheme& s, std::span<const std::size_t> classes,
                     const char* what) {
  for (std::size_t c : classes) {
    require_class(s, c, what);
  }
  std::vector<std::size_t> sorted(classes.begin(), classes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError(std::string(what) + ": repeated class index");
  }
}

double degree(const AssociationScheme& s, std::size_t c) {
  return static_cast<double>(s.degrees[c]);
}

double edge_count(const AssociationScheme& s, std::span<const std::size_t> classes) {
  double k = 0.0;
  for (std::size_t c : classes) {
    k += degree(s, c);
  }
  return static_cast<double>(s.order()) * k / 2.0;
}

// LP over the coordinates x_0..x_d of M = sum x_c A_c with the eigenvalue
// constraints Px >= 0.
lp::LinearProgram algebra_lp(const AssociationScheme& s, lp::Sense sense) {
  const std::size_t r = s.P.rows();
  lp::LinearProgram prog;
  prog.sense = sense;
  for (std::size_t c = 0; c < r; ++c) {
    prog.add_variable(0.0, -lp::kInf, lp::kInf);
  }
  for (std::size_t l = 0; l < r; ++l) {
    const auto row = s.P.row(l);
    prog.add_constraint(std::vector<double>(row.begin(), row.end()), lp::Relation::greater_equal,
                        0.0);
  }
  return prog;
}

lp::Solution solve_or_throw(const lp::LinearProgram& prog, const char* what) {
  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::optimal) {
    throw NumericError(std::string(what) + ": LP is " + std::string(lp::to_string(sol.status)));
  }
  return sol;
}

std::vector<double> unit(std::size_t size, std::size_t at, double value = 1.0) {
  std::vector<double> v(size, 0.0);
  v[at] = value;
  return v;
}

double min_eig(const Matrix& m) { return m.rows() == 0 ? 0.0 : lambda_min(m); }

} // namespace

EtaCertificates eta_scheme(const AssociationScheme& s, std::size_t i) {
  require_class(s, i, "eta_scheme");
  const std::size_t r = s.P.rows();
  const double n = static_cast<double>(s.order());
  EtaCertificates c;
  c.degree = s.degrees[i];
  c.edges = static_cast<std::size_t>(s.order() * static_cast<std::size_t>(c.degree) / 2);
  c.eigen_row = 0;
  c.lambda_min = s.P(0, i);
  for (std::size_t l = 1; l < r; ++l) {
    if (s.P(l, i) < c.lambda_min) {
      c.lambda_min = s.P(l, i);
      c.eigen_row = l;
    }
  }
  const double k = static_cast<double>(c.degree);
  c.value = n / 4.0 * (k - c.lambda_min);
  c.M = s.idempotents[c.eigen_row] * (n / s.multiplicities[c.eigen_row]);
  c.x.assign(s.order(), (k - c.lambda_min) / 4.0);
  c.rho = c.value;
  c.mu = static_cast<double>(c.edges) / c.value;
  c.N = c.M * c.mu;
  return c;
}

CertificateCheck check_eta_certificates(const Matrix& adjacency, const EtaCertificates& c,
                                        double tol) {
  const std::size_t n = adjacency.rows();
  Matrix L = adjacency * -1.0;
  for (std::size_t v = 0; v < n; ++v) {
    double deg = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      deg += adjacency(v, u);
    }
    L(v, v) = deg;
  }

  CertificateCheck out;
  for (std::size_t v = 0; v < n; ++v) {
    out.primal_diag_error = std::max(out.primal_diag_error, std::abs(c.M(v, v) - 1.0));
    out.gauge_diag_error = std::max(out.gauge_diag_error, std::abs(c.N(v, v) - c.mu));
  }
  out.primal_min_eig = min_eig(c.M);
  out.primal_objective = inner(L, c.M) / 4.0;
  out.primal_ok = out.primal_diag_error <= tol && out.primal_min_eig >= -tol;

  Matrix dual = diag_matrix(c.x) - L * 0.25;
  out.dual_min_eig = min_eig(dual);
  out.dual_slack = c.rho - std::accumulate(c.x.begin(), c.x.end(), 0.0);
  out.dual_objective = c.rho;
  out.dual_ok = out.dual_min_eig >= -tol && out.dual_slack >= -tol;

  out.gauge_min_eig = min_eig(c.N);
  out.gauge_min_edge = lp::kInf;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adjacency(u, v) != 0.0) {
        out.gauge_min_edge = std::min(out.gauge_min_edge, c.N(u, u) + c.N(v, v) - 2.0 * c.N(u, v));
      }
    }
  }
  out.gauge_ok = out.gauge_diag_error <= tol && out.gauge_min_eig >= -tol &&
                 out.gauge_min_edge >= 4.0 - tol;

  const double scale = tol * (1.0 + std::abs(c.value));
  out.values_match = std::abs(out.primal_objective - c.value) <= scale &&
                     std::abs(out.dual_objective - c.value) <= scale;
  return out;
}

double eta_lp(const AssociationScheme& s, std::span<const std::size_t> classes) {
  require_classes(s, classes, "eta_lp");
  const double n = static_cast<double>(s.order());
  auto prog = algebra_lp(s, lp::Sense::maximize);
  prog.lower[0] = prog.upper[0] = 1.0;
  double constant = 0.0;
  for (std::size_t c : classes) {
    prog.objective[c] = -n / 4.0 * degree(s, c);
    constant += n / 4.0 * degree(s, c);
  }
  return constant + solve_or_throw(prog, "eta_lp").value;
}

double eta_dual_lp(const AssociationScheme& s, std::span<const std::size_t> classes) {
  require_classes(s, classes, "eta_dual_lp");
  if (classes.empty()) {
    throw InputError("eta_dual_lp: graph has no edges");
  }
  const std::size_t r = s.P.rows();
  auto prog = algebra_lp(s, lp::Sense::minimize);
  prog.objective[0] = 1.0;
  prog.add_constraint(unit(r, 0), lp::Relation::greater_equal, 0.0);
  for (std::size_t c : classes) {
    auto row = unit(r, 0);
    row[c] = -1.0;
    prog.add_constraint(std::move(row), lp::Relation::greater_equal, 2.0);
  }
  return solve_or_throw(prog, "eta_dual_lp").value;
}

EtaDualResult eta_dual_scheme(const AssociationScheme& s, std::size_t i) {
  require_class(s, i, "eta_dual_scheme");
  const auto cert = eta_scheme(s, i);
  const std::size_t r = s.P.rows();
  const double n = static_cast<double>(s.order());
  const double k = static_cast<double>(cert.degree);

  EtaDualResult out;
  out.value = 2.0 * k / (k - cert.lambda_min);
  const std::size_t cls[] = {i};
  out.lp_value = eta_dual_lp(s, cls);

  out.a = 0.0;
  out.b = k / (k - cert.lambda_min);
  out.y.resize(r);
  for (std::size_t l = 0; l < r; ++l) {
    out.y[l] = (out.b * s.P(l, i) / k + 1.0 - out.a - out.b) * s.multiplicities[l] / n;
  }
  double viol = std::max({0.0, -out.a, -out.b});
  for (std::size_t j = 0; j < r; ++j) {
    double col = 0.0;
    for (std::size_t l = 0; l < r; ++l) {
      col += s.P(l, j) * out.y[l];
    }
    if (j == 0) {
      col += out.a + out.b - 1.0;
    } else if (j == i) {
      col -= out.b;
    }
    viol = std::max(viol, std::abs(col));
  }
  for (double v : out.y) {
    viol = std::max(viol, -v);
  }
  out.witness_violation = viol;
  out.witness_objective = 2.0 * out.b;
  return out;
}

ProductCheck eta_product_check(const AssociationScheme& s, std::size_t i) {
  ProductCheck out;
  const auto cert = eta_scheme(s, i);
  const auto dual = eta_dual_scheme(s, i);
  out.product = cert.value * dual.value;
  out.edges = static_cast<double>(cert.edges);
  out.gap = out.product - out.edges;
  out.equal = std::abs(out.gap) <= kGaugeProductTol * out.edges;
  return out;
}

ScalingCheck scaling_equivalence_check(const AssociationScheme& s,
                                       std::span<const std::size_t> classes, const Matrix& M,
                                       double mu) {
  require_classes(s, classes, "scaling_equivalence_check");
  if (!(mu > 0.0)) {
    throw InputError("scaling_equivalence_check: mu must be positive");
  }
  const std::size_t n = s.order();
  if (M.rows() != n || M.cols() != n) {
    throw InputError("scaling_equivalence_check: dimension mismatch");
  }
  const double residue = max_abs_diff(project(s.config, M), M);
  if (residue > kSpanTol) {
    throw InputError("scaling_equivalence_check: matrix is not in the span of the scheme "
                     "(projection residue " + std::to_string(residue) + ")");
  }
  Matrix adj(n, n);
  for (std::size_t c : classes) {
    adj += s.class_matrix(c);
  }
  const double edges = edge_count(s, classes);
  const double tol = 1e-8;

  ScalingCheck out;
  const Matrix N = M * mu;
  bool gauge = min_eig(N) >= -tol;
  for (std::size_t u = 0; u < n && gauge; ++u) {
    if (std::abs(N(u, u) - mu) > tol) {
      gauge = false;
    }
    for (std::size_t v = u + 1; v < n && gauge; ++v) {
      if (adj(u, v) != 0.0 && (N(u, u) + N(v, v) - 2.0 * N(u, v)) / 4.0 < 1.0 - tol) {
        gauge = false;
      }
    }
  }
  out.gauge_feasible = gauge;

  bool primal = min_eig(M) >= -tol;
  for (std::size_t u = 0; u < n && primal; ++u) {
    primal = std::abs(M(u, u) - 1.0) <= tol;
  }
  if (primal) {
    // <L, M> = sum over edges of (M_uu + M_vv - 2 M_uv)
    double objective = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (adj(u, v) != 0.0) {
          objective += M(u, u) + M(v, v) - 2.0 * M(u, v);
        }
      }
    }
    primal = objective / 4.0 >= edges / mu - tol * (1.0 + edges / mu);
  }
  out.primal_feasible = primal;
  return out;
}

GammaResult gamma_scheme(const AssociationScheme& s, std::size_t i1, std::size_t i2) {
  require_class(s, i1, "gamma_scheme");
  require_class(s, i2, "gamma_scheme");
  if (i1 == i2) {
    throw InputError("gamma_scheme: the two graphs must be different classes");
  }
  const std::size_t r = s.P.rows();
  const double n = static_cast<double>(s.order());
  const double k1 = degree(s, i1);
  const double k2 = degree(s, i2);

  GammaResult out;
  out.alpha_star = -lp::kInf;
  for (std::size_t l = 0; l < r; ++l) {
    out.alpha_star = std::max(out.alpha_star, s.P(l, i2) - s.P(l, i1));
  }
  out.value = n / 2.0 * (k1 + k2 + out.alpha_star);

  // min 1^T y s.t. R^T y = k1 e1 - k2 e2, y >= 0 (R = P without column 0)
  lp::LinearProgram prog;
  prog.sense = lp::Sense::minimize;
  for (std::size_t l = 0; l < r; ++l) {
    prog.add_variable(1.0);
  }
  for (std::size_t j = 1; j < r; ++j) {
    const double rhs = j == i1 ? k1 : (j == i2 ? -k2 : 0.0);
    prog.add_constraint(s.P.column(j), lp::Relation::equal, rhs);
  }
  out.lp_value = n / 2.0 * (k1 + k2 + solve_or_throw(prog, "gamma_scheme").value);

  out.y.resize(r);
  for (std::size_t l = 0; l < r; ++l) {
    out.y[l] = s.multiplicities[l] * (s.P(l, i1) - s.P(l, i2) + out.alpha_star) / n;
  }
  out.witness_violation = lp::max_violation(prog, out.y);
  out.witness_objective =
      n / 2.0 * (k1 + k2 + std::accumulate(out.y.begin(), out.y.end(), 0.0));
  return out;
}

Matrix gamma_primal(const AssociationScheme& s, std::size_t i1, std::size_t i2) {
  require_class(s, i1, "gamma_primal");
  require_class(s, i2, "gamma_primal");
  std::size_t best = 0;
  for (std::size_t l = 1; l < s.P.rows(); ++l) {
    if (s.P(l, i2) - s.P(l, i1) > s.P(best, i2) - s.P(best, i1)) {
      best = l;
    }
  }
  return s.idempotents[best] * (static_cast<double>(s.order()) / s.multiplicities[best]);
}

double gamma_lp(const AssociationScheme& s, std::span<const std::size_t> first,
                std::span<const std::size_t> second) {
  std::vector<std::size_t> all(first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  require_classes(s, all, "gamma_lp");
  const double n = static_cast<double>(s.order());
  auto prog = algebra_lp(s, lp::Sense::maximize);
  prog.lower[0] = prog.upper[0] = 1.0;
  double k = 0.0;
  for (std::size_t c : first) {
    prog.objective[c] = -degree(s, c);
    k += degree(s, c);
  }
  for (std::size_t c : second) {
    prog.objective[c] = degree(s, c);
    k += degree(s, c);
  }
  return n / 2.0 * (k + solve_or_throw(prog, "gamma_lp").value);
}

double gamma_with_empty_second(const AssociationScheme& s, std::size_t i) {
  require_class(s, i, "gamma_with_empty_second");
  // k2 = 0 and a zero second column
  double alpha = -lp::kInf;
  for (std::size_t l = 0; l < s.P.rows(); ++l) {
    alpha = std::max(alpha, -s.P(l, i));
  }
  return static_cast<double>(s.order()) / 2.0 * (degree(s, i) + alpha);
}

std::vector<double> GammaDualLp::witness() const {
  std::vector<double> out(y);
  out.push_back(a);
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

GammaDualLp gamma_dual_lp(const AssociationScheme& s, std::span<const std::size_t> first,
                          std::span<const std::size_t> second) {
  std::vector<std::size_t> all(first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  require_classes(s, all, "gamma_dual_lp");
  if (all.empty()) {
    throw InputError("gamma_dual_lp: both graphs are edgeless");
  }
  const std::size_t r = s.P.rows();
  GammaDualLp out;

  auto minp = algebra_lp(s, lp::Sense::minimize);
  minp.objective[0] = 1.0;
  for (std::size_t c : first) {
    auto row = unit(r, 0);
    row[c] = -1.0;
    minp.add_constraint(std::move(row), lp::Relation::greater_equal, 1.0);
  }
  for (std::size_t c : second) {
    auto row = unit(r, 0);
    row[c] = 1.0;
    minp.add_constraint(std::move(row), lp::Relation::greater_equal, 1.0);
  }
  out.min_value = solve_or_throw(minp, "gamma_dual_lp (min form)").value;

  // variables: y_0..y_d, a, b per class of S1, c per class of S2
  const std::size_t nb = first.size();
  const std::size_t nc = second.size();
  const std::size_t nv = r + 1 + nb + nc;
  lp::LinearProgram maxp;
  maxp.sense = lp::Sense::maximize;
  for (std::size_t v = 0; v < nv; ++v) {
    maxp.add_variable(v > r ? 1.0 : 0.0);
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<double> row(nv, 0.0);
    for (std::size_t l = 0; l < r; ++l) {
      row[l] = s.P(l, j);
    }
    double rhs = 0.0;
    if (j == 0) {
      std::fill(row.begin() + static_cast<long>(r), row.end(), 1.0);
      rhs = 1.0;
    }
    for (std::size_t t = 0; t < nb; ++t) {
      if (first[t] == j) {
        row[r + 1 + t] = -1.0;
      }
    }
    for (std::size_t t = 0; t < nc; ++t) {
      if (second[t] == j) {
        row[r + 1 + nb + t] = 1.0;
      }
    }
    maxp.add_constraint(std::move(row), lp::Relation::equal, rhs);
  }
  const auto sol = solve_or_throw(maxp, "gamma_dual_lp (max form)");
  out.max_value = sol.value;
  out.y.assign(sol.point.begin(), sol.point.begin() + static_cast<long>(r));
  out.a = sol.point[r];
  out.b.assign(sol.point.begin() + static_cast<long>(r + 1),
               sol.point.begin() + static_cast<long>(r + 1 + nb));
  out.c.assign(sol.point.begin() + static_cast<long>(r + 1 + nb), sol.point.end());
  return out;
}

GammaDualLp gamma_dual_lp(const AssociationScheme& s, std::size_t i1, std::size_t i2) {
  if (i1 == i2) {
    throw InputError("gamma_dual_lp: the two graphs must be different classes");
  }
  const std::size_t first[] = {i1};
  const std::size_t second[] = {i2};
  return gamma_dual_lp(s, first, second);
}

WitnessEvaluation evaluate_gamma_dual_witness(const AssociationScheme& s, std::size_t i1,
                                              std::size_t i2, std::span<const double> flat) {
  require_class(s, i1, "evaluate_gamma_dual_witness");
  require_class(s, i2, "evaluate_gamma_dual_witness");
  const std::size_t r = s.P.rows();
  if (flat.size() != r + 3) {
    throw InputError("evaluate_gamma_dual_witness: expected " + std::to_string(r + 3) +
                     " entries (y_0..y_d, a, b, c), got " + std::to_string(flat.size()));
  }
  const double a = flat[r];
  const double b = flat[r + 1];
  const double c = flat[r + 2];
  WitnessEvaluation out;
  for (double v : flat) {
    out.max_violation = std::max(out.max_violation, -v);
  }
  for (std::size_t j = 0; j < r; ++j) {
    double lhs = 0.0;
    for (std::size_t l = 0; l < r; ++l) {
      lhs += s.P(l, j) * flat[l];
    }
    double rhs = 0.0;
    if (j == 0) {
      rhs = 1.0 - a - b - c;
    } else if (j == i1) {
      rhs = b;
    } else if (j == i2) {
      rhs = -c;
    }
    out.max_violation = std::max(out.max_violation, std::abs(lhs - rhs));
  }
  out.objective = b + c;
  out.feasible = out.max_violation <= 1e-9;
  return out;
}

IndexProfile gamma_dual_index_profile(const Matrix& P, double c) {
  if (P.rows() < 3 || P.cols() < 3) {
    throw InputError("gamma_dual_index_profile: need at least two nontrivial classes");
  }
  const double k1 = P(0, 1);
  const double k2 = P(0, 2);
  IndexProfile out;
  double best = lp::kInf;
  for (std::size_t l = 1; l < P.rows(); ++l) {
    const double denom = k1 - P(l, 1);
    const double v = k1 / denom - c * (k1 * P(l, 2) + k2 * P(l, 1)) / (denom * k2);
    out.values.push_back(v);
    if (v < best - 1e-12 * (1.0 + std::abs(v))) {
      best = v;
      out.argmin = l;
    }
  }
  return out;
}

GammaDualDrg gamma_dual_drg(const Graph& g1) {
  GammaDualDrg out{0.0, 0.0, 0.0, scheme_from_drg(g1)};
  const auto& s = out.drg.scheme;
  const std::size_t d = s.classes();
  if (d < 2) {
    throw InputError("gamma_dual_drg: diameter must be at least 2");
  }
  const double k1 = s.P(0, 1);
  const double k2 = s.P(0, 2);
  const double pd1 = s.P(d, 1);
  const double pd2 = s.P(d, 2);
  out.sign_term = k2 * pd1 + k1 * pd2;
  out.value = k1 / (k1 - pd1);
  if (out.sign_term <= 0.0) {
    out.value -= out.sign_term / (2.0 * k2 * (k1 - pd1));
  }
  out.lp_value = gamma_dual_lp(s, 1, 2).min_value;
  return out;
}

GaugeClassification classify_gauge(double gamma, double gamma_dual, double edges) {
  GaugeClassification out;
  out.gamma = gamma;
  out.gamma_dual = gamma_dual;
  out.edges = edges;
  out.product = gamma * gamma_dual;
  out.gap = out.product - edges;
  if (std::abs(out.gap) <= 1e-9 * std::max(1.0, edges)) {
    out.gap = 0.0; // rounding noise; keeps reports stable
  }
  out.equality = std::abs(out.gap) <= kGaugeProductTol * edges;
  return out;
}

GaugeClassification gauge_classification(const AssociationScheme& s, std::size_t i1,
                                         std::size_t i2) {
  const auto g = gamma_scheme(s, i1, i2);
  const auto gd = gamma_dual_lp(s, i1, i2);
  const std::size_t both[] = {i1, i2};
  return classify_gauge(g.value, gd.min_value, edge_count(s, both));
}

namespace {

std::string flag_list(const ConfigurationFlags& f) {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (!ok) {
      out += out.empty() ? "" : ", ";
      out += name;
    }
  };
  add(f.homogeneous, "homogeneous");
  add(f.commutative, "commutative");
  add(f.symmetric, "symmetric");
  return out;
}

bool is_distance_two_pair(const Graph& g1, const Graph& g2) {
  if (!intersection_array(g1) || diameter(g1) < 2) {
    return false;
  }
  return distance_graphs(g1)[1] == g2;
}

} // namespace

BoundsReport compute_bounds(const Graph& g1, const Graph* g2, std::string id1, std::string id2) {
  BoundsReport rep;
  rep.graph1 = std::move(id1);
  rep.graph2 = std::move(id2);
  rep.order = g1.order();
  rep.edges1 = g1.size();
  if (g2 != nullptr) {
    if (g2->order() != g1.order()) {
      throw InputError("second graph has " + std::to_string(g2->order()) +
                       " vertices, first has " + std::to_string(g1.order()));
    }
    rep.edges2 = g2->size();
    for (const auto& [u, v] : g2->edges()) {
      if (g1.adjacent(u, v)) {
        rep.reason = "graphs share edges";
        return rep;
      }
    }
  }
  if (g1.size() == 0) {
    rep.reason = "first graph has no edges";
    return rep;
  }

  std::vector<Matrix> seeds{g1.adjacency()};
  if (g2 != nullptr) {
    seeds.push_back(g2->adjacency());
  }
  const auto cfg = coherent_closure(seeds);
  if (!cfg.flags().is_association_scheme()) {
    rep.reason = "coherent closure is not an association scheme (not " + flag_list(cfg.flags()) + ")";
    return rep;
  }
  const auto s = scheme_from_configuration(cfg);
  rep.available = true;
  rep.scheme_classes = s.classes();
  rep.classes1 = *class_decomposition(cfg, seeds[0]);

  const double edges1 = static_cast<double>(rep.edges1);
  if (rep.classes1.size() == 1) {
    const std::size_t i = rep.classes1.front();
    const auto cert = eta_scheme(s, i);
    rep.certificates_ok = check_eta_certificates(seeds[0], cert).ok();
    rep.eta = cert.value;
    rep.eta_dual = eta_dual_scheme(s, i).value;
  } else {
    rep.eta = eta_lp(s, rep.classes1);
    rep.eta_dual = eta_dual_lp(s, rep.classes1);
  }
  rep.eta_product = *rep.eta * *rep.eta_dual;
  rep.eta_equality = std::abs(*rep.eta_product - edges1) <= kGaugeProductTol * edges1;

  if (g2 == nullptr) {
    return rep;
  }
  rep.classes2 = *class_decomposition(cfg, seeds[1]);
  if (rep.classes1.size() == 1 && rep.classes2.size() == 1) {
    rep.gamma = gamma_scheme(s, rep.classes1.front(), rep.classes2.front()).value;
  } else if (rep.classes2.empty()) {
    rep.gamma = 2.0 * *rep.eta;
  } else {
    rep.gamma = gamma_lp(s, rep.classes1, rep.classes2);
  }
  if (is_distance_two_pair(g1, *g2)) {
    rep.gamma_dual = gamma_dual_drg(g1).value;
    rep.gamma_dual_method = "closed-form";
  } else {
    rep.gamma_dual = gamma_dual_lp(s, rep.classes1, rep.classes2).min_value;
    rep.gamma_dual_method = "lp";
  }
  const auto cls = classify_gauge(*rep.gamma, *rep.gamma_dual,
                                  static_cast<double>(rep.edges1 + rep.edges2));
  rep.gamma_product = cls.product;
  rep.gamma_gap = cls.gap;
  rep.classification = cls.kind();
  return rep;
}

} // namespace sg
