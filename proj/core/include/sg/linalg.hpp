#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sg/matrix.hpp"

namespace sg {

inline constexpr double kDefaultPsdTol = 1e-8;

/// Eigenvalues ascending; `vectors` holds the matching orthonormal
/// eigenvectors as columns.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations, iterated until
/// the off-diagonal Frobenius norm drops below 1e-12 * ||m||_F.
/// Throws InputError when max|m_ij - m_ji| > 1e-9.
EigenDecomposition eig_sym(const Matrix& m);

double lambda_min(const Matrix& m);

bool is_psd(const Matrix& m, double tol = kDefaultPsdTol);

/// Distinct eigenvalues of a symmetric matrix, merging values closer than
/// 1e-7 * (1 + ||m||_inf).
std::vector<double> distinct_eigenvalues(const Matrix& m);

/// Unit vectors v_i (one per row of the result) with <v_i, v_j> = m_ij.
/// Eigenvalues in [-tol, 0) are clipped; dimension equals the numerical rank.
/// Throws InputError when m is not PSD within tol or diag(m) != 1 within tol.
std::vector<std::vector<double>> gram_factor(const Matrix& m, double tol = kDefaultPsdTol);

/// Orthogonal projection of m onto span(basis) for a basis that is pairwise
/// orthogonal under the trace inner product.
Matrix project_orthogonal(const Matrix& m, std::span<const Matrix> basis);

} // namespace sg
