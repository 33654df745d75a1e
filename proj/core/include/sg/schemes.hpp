#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sg/coherent.hpp"
#include "sg/graphs.hpp"
#include "sg/matrix.hpp"

namespace sg {

/// Symmetric association scheme {A_0 = I, A_1, ..., A_d} with its eigenmatrices.
///
/// Row l of P lists the eigenvalues of A_0..A_d on the l-th common eigenspace.
/// Row 0 is (1, k_1, ..., k_d); the remaining rows are ordered by strictly
/// decreasing P_{l1}, falling back to descending lexicographic comparison of
/// the whole row on ties. Q = n P^{-1}, m = first row of Q, and
/// E_l = (1/n) sum_i Q_il A_i.
struct AssociationScheme {
  CoherentConfiguration config;
  std::vector<std::int64_t> degrees; // k_i = p_ii^0
  Matrix P;
  Matrix Q;
  std::vector<double> multiplicities;
  std::vector<Matrix> idempotents;

  std::size_t order() const noexcept { return config.order(); }
  std::size_t classes() const noexcept { return config.rank() - 1; } // d
  const IntersectionNumbers& p() const noexcept { return config.intersection_numbers(); }
  Matrix class_matrix(std::size_t i) const { return config.class_matrix(i); }
};

struct IntersectionArray {
  std::vector<std::int64_t> b; // b_0 .. b_{d-1}
  std::vector<std::int64_t> c; // c_1 .. c_d

  std::size_t diameter() const noexcept { return c.size(); }
  bool operator==(const IntersectionArray&) const = default;
};

struct DrgScheme {
  AssociationScheme scheme; // class i = distance-i relation
  IntersectionArray array;
};

/// Builds the scheme from a homogeneous, commutative, symmetric configuration.
/// Throws InputError listing the failed flag(s) otherwise.
AssociationScheme scheme_from_configuration(const CoherentConfiguration& cfg);

/// Distance scheme of a distance-regular graph. Throws InputError when g is
/// disconnected, irregular, or fails distance-regularity (naming the pair).
DrgScheme scheme_from_drg(const Graph& g);

/// Intersection array if g is distance-regular, nothing otherwise.
std::optional<IntersectionArray> intersection_array(const Graph& g);

struct Eigenmatrices {
  Matrix P;
  Matrix Q;
  std::vector<double> multiplicities;
};

/// Eigenmatrices from the intersection numbers by simultaneous diagonalization
/// of the (d+1)-dimensional intersection matrices B_i, symmetrized with the
/// degrees. Degeneracies of B_1 are resolved with B_2, ..., B_d.
Eigenmatrices eigenmatrices(const IntersectionNumbers& p, std::size_t n);

std::vector<Matrix> idempotents(const AssociationScheme& s);

struct OrthogonalityReport {
  double pq_residual = 0.0;          // max |PQ - nI|, |QP - nI|
  double row_relation_residual = 0.0; // sum_l P_il P_jl / k_l = delta_ij n / m_i
  double col_relation_residual = 0.0; // sum_l P_li P_lj m_l = delta_ij n k_i
  double duality_residual = 0.0;     // P_ji m_j = Q_ij k_i
  double reconstruction_residual = 0.0; // sum_l P_li E_l = A_i
  double idempotent_residual = 0.0;  // E_l E_j = delta_lj E_l
  bool ok(double tol = 1e-7) const noexcept;
};

OrthogonalityReport check_orthogonality(const AssociationScheme& s);

struct EigenRelationReport {
  std::vector<double> residuals; // per row l
  double max_residual = 0.0;
  bool pass = false;
};

/// P_l2 = (k_2 / (b_1 k_1)) (P_l1^2 - (k_1 - b_1 - 1) P_l1 - k_1) for each row;
/// `P` must be the canonical eigenmatrix of the distance scheme (d >= 2).
EigenRelationReport drg_eigenvalue_relation(const IntersectionArray& ia, const Matrix& P);

struct WalkRegularityReport {
  bool walk_regular = false;
  bool one_walk_regular = false;
  std::size_t minimal_polynomial_degree = 0;
  /// a_l (diagonal constant of A^l) and b_l (edge constant of A^l) for
  /// l = 0..deg-1; entries after the first failure are left unset.
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  /// {I, A, A_2, ...}: pairwise orthogonal, A_l vanishing on the diagonal and
  /// on the edges for l >= 2. Filled only when 1-walk-regular.
  std::vector<Matrix> basis;
};

/// Tests constancy of A^l on the diagonal and on edges for l below the degree
/// of the minimal polynomial (higher powers are combinations of these).
/// Throws NumericError if a power overflows 128-bit integers.
WalkRegularityReport walk_regularity(const Graph& g);

} // namespace sg
