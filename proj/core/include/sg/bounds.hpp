#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sg/graphs.hpp"
#include "sg/matrix.hpp"
#include "sg/schemes.hpp"

namespace sg {

/// Goemans-Williamson constant min_{0<t<=pi} (2/pi) t / (1 - cos t).
inline constexpr double kAlphaGW = 0.87856720578;

/// Tolerances used throughout; reported alongside every numeric output.
inline constexpr double kCertificateTol = 1e-7;
inline constexpr double kClosedFormTol = 1e-7;
inline constexpr double kGaugeProductTol = 1e-6;
inline constexpr double kSpanTol = 1e-8;

/// Optimal primal, dual and gauge-dual solutions for the maxcut SDP of a
/// graph that is one class of a scheme.
struct EtaCertificates {
  double value = 0.0;        // eta
  double lambda_min = 0.0;
  std::int64_t degree = 0;
  std::size_t eigen_row = 0; // row of P attaining lambda_min
  std::size_t edges = 0;
  Matrix M;                  // diag(M) = 1, M PSD, <L,M>/4 = eta
  std::vector<double> x;     // Diag(x) - L/4 PSD
  double rho = 0.0;          // rho >= 1^T x
  Matrix N;                  // diag(N) = mu 1, N PSD, L*(N) >= 4 on edges
  double mu = 0.0;
};

EtaCertificates eta_scheme(const AssociationScheme& s, std::size_t i);

struct CertificateCheck {
  double primal_diag_error = 0.0;
  double primal_min_eig = 0.0;
  double primal_objective = 0.0;
  double dual_min_eig = 0.0; // lambda_min(Diag(x) - L/4)
  double dual_slack = 0.0;   // rho - 1^T x
  double dual_objective = 0.0;
  double gauge_diag_error = 0.0;
  double gauge_min_eig = 0.0;
  double gauge_min_edge = 0.0; // min over edges of L*(N)_ij = N_ii + N_jj - 2 N_ij
  bool primal_ok = false;
  bool dual_ok = false;
  bool gauge_ok = false;
  bool values_match = false;
  bool ok() const noexcept { return primal_ok && dual_ok && gauge_ok && values_match; }
};

/// Verifies every certificate directly against the adjacency matrix, without
/// using any scheme data.
CertificateCheck check_eta_certificates(const Matrix& adjacency, const EtaCertificates& c,
                                        double tol = kCertificateTol);

/// eta over an arbitrary union of classes: max (n/4) sum_c k_c (1 - x_c)
/// subject to Px >= 0, x_0 = 1.
double eta_lp(const AssociationScheme& s, std::span<const std::size_t> classes);

/// Gauge dual over a union of classes: min x_0 s.t. Px >= 0, x_0 >= 0 and
/// x_0 - x_c >= 2 for every class c in the union.
double eta_dual_lp(const AssociationScheme& s, std::span<const std::size_t> classes);

struct EtaDualResult {
  double value = 0.0;    // 2k / (k - lambda_min)
  double lp_value = 0.0; // independent LP solve
  // dual LP witness: max 2b s.t. sum_l y_l + a + b = 1, sum_l P_li y_l = b,
  // sum_l P_lj y_l = 0 for other j, all variables >= 0
  double a = 0.0;
  double b = 0.0;
  std::vector<double> y;
  double witness_violation = 0.0;
  double witness_objective = 0.0;
};

EtaDualResult eta_dual_scheme(const AssociationScheme& s, std::size_t i);

struct ProductCheck {
  double product = 0.0;
  double edges = 0.0;
  double gap = 0.0; // product - edges
  bool equal = false;
};

ProductCheck eta_product_check(const AssociationScheme& s, std::size_t i);

struct ScalingCheck {
  bool gauge_feasible = false;  // N = mu M feasible for the gauge dual
  bool primal_feasible = false; // M feasible for the SDP with <L,M>/4 >= |E|/mu
  bool agree() const noexcept { return gauge_feasible == primal_feasible; }
};

/// Evaluates both sides of the scaling equivalence for the graph formed by
/// `classes`. Throws InputError when M is not in the span of the scheme
/// (projection residue above kSpanTol) or mu <= 0.
ScalingCheck scaling_equivalence_check(const AssociationScheme& s,
                                       std::span<const std::size_t> classes, const Matrix& M,
                                       double mu);

struct GammaResult {
  double value = 0.0;      // (n/2)(k1 + k2 + alpha*)
  double lp_value = 0.0;   // via min{1^T y : R^T y = k1 e1 - k2 e2, y >= 0}
  double alpha_star = 0.0; // max_l (P_l2 - P_l1)
  std::vector<double> y;   // witness, y >= 0
  double witness_violation = 0.0;
  double witness_objective = 0.0;
};

/// Quadratic-program SDP value for G1 = class i1, G2 = class i2.
GammaResult gamma_scheme(const AssociationScheme& s, std::size_t i1, std::size_t i2);

/// Optimal SDP matrix (n/m_l) E_l for the row l attaining alpha*; diag = 1.
Matrix gamma_primal(const AssociationScheme& s, std::size_t i1, std::size_t i2);

/// Same quantity for unions of classes, by LP:
/// (n/2)(k_S1 + k_S2 + max{sum_S2 k_c x_c - sum_S1 k_c x_c : Px >= 0, x_0 = 1}).
double gamma_lp(const AssociationScheme& s, std::span<const std::size_t> first,
                std::span<const std::size_t> second);

/// gamma with an empty second graph, which reduces to 2 eta.
double gamma_with_empty_second(const AssociationScheme& s, std::size_t i);

struct GammaDualLp {
  double min_value = 0.0; // min x_0 s.t. Px >= 0, x_0 - x_c >= 1 (c in S1), x_0 + x_c >= 1 (c in S2)
  double max_value = 0.0; // dual: max sum b + sum c
  std::vector<double> y;  // per row of P
  double a = 0.0;
  std::vector<double> b;  // one per class of S1
  std::vector<double> c;  // one per class of S2

  /// (y_0..y_d, a, b..., c...), the flattened witness order.
  std::vector<double> witness() const;
};

GammaDualLp gamma_dual_lp(const AssociationScheme& s, std::span<const std::size_t> first,
                          std::span<const std::size_t> second);
GammaDualLp gamma_dual_lp(const AssociationScheme& s, std::size_t i1, std::size_t i2);

struct WitnessEvaluation {
  double max_violation = 0.0; // equality residuals and negativity
  double objective = 0.0;     // b + c
  bool feasible = false;      // max_violation <= 1e-9
};

/// Checks a flattened (y_0..y_d, a, b, c) vector against
/// P^T y = b e_i1 - c e_i2 + (1 - a - b - c) e_0, y, a, b, c >= 0.
WitnessEvaluation evaluate_gamma_dual_witness(const AssociationScheme& s, std::size_t i1,
                                              std::size_t i2, std::span<const double> flat);

struct IndexProfile {
  std::vector<double> values; // gamma_dual_l(c) for l = 1..d
  std::size_t argmin = 0;     // row index in 1..d
};

/// gamma_dual_l(c) = k1/(k1 - P_l1) - c (k1 P_l2 + k2 P_l1) / ((k1 - P_l1) k2)
/// evaluated on the distance scheme of a distance-regular graph.
IndexProfile gamma_dual_index_profile(const Matrix& P, double c);

struct GammaDualDrg {
  double value = 0.0;
  double lp_value = 0.0;
  double sign_term = 0.0; // k2 P_d1 + k1 P_d2
  DrgScheme drg;
};

/// Closed form for G1 distance-regular with diameter >= 2 and G2 its
/// distance-2 graph. Throws InputError when g1 is not such a graph.
GammaDualDrg gamma_dual_drg(const Graph& g1);

struct GaugeClassification {
  double gamma = 0.0;
  double gamma_dual = 0.0;
  double edges = 0.0; // |E1| + |E2|
  double product = 0.0;
  double gap = 0.0; // product - edges, 0 when within 1e-9 * max(1, edges)
  bool equality = false;
  std::string kind() const { return equality ? "equality" : "strict"; }
};

GaugeClassification classify_gauge(double gamma, double gamma_dual, double edges);
GaugeClassification gauge_classification(const AssociationScheme& s, std::size_t i1,
                                         std::size_t i2);

/// Spectral side of a report for one graph (eta, eta-dual) or a pair
/// (additionally gamma, gamma-dual and the gauge classification).
struct BoundsReport {
  std::string graph1;
  std::string graph2;
  std::size_t order = 0;
  std::size_t edges1 = 0;
  std::size_t edges2 = 0;
  bool available = false;
  std::string reason; // why bounds are unavailable
  std::size_t scheme_classes = 0;
  std::vector<std::size_t> classes1;
  std::vector<std::size_t> classes2;

  std::optional<double> eta;
  std::optional<double> eta_dual;
  std::optional<double> eta_product;
  std::optional<bool> eta_equality;
  bool certificates_ok = false;

  std::optional<double> gamma;
  std::optional<double> gamma_dual;
  std::string gamma_dual_method; // "closed-form" or "lp"
  std::optional<double> gamma_product;
  std::optional<double> gamma_gap;
  std::optional<std::string> classification;

  // oracle side, filled by the caller
  std::optional<std::int64_t> mc;
  std::optional<double> fcc;
  std::optional<std::int64_t> qp;
  std::string oracle_note;
};

/// Runs closure, scheme detection and the bounds for g1 (and g2 if given).
BoundsReport compute_bounds(const Graph& g1, const Graph* g2, std::string id1 = {},
                            std::string id2 = {});

} // namespace sg
