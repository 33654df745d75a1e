#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sg {

/// Dense row-major real matrix. Used for adjacency/Laplacian operators (n x n),
/// eigenmatrices ((d+1) x (d+1)) and small LP data.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> column(std::size_t c) const;

  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double s) noexcept;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// Trace inner product <A, B> = sum_ij A_ij B_ij.
double inner(const Matrix& a, const Matrix& b);

/// Entrywise (Schur) product.
Matrix hadamard(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a) noexcept;
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a) noexcept;
/// Maximum absolute row sum.
double inf_norm(const Matrix& a) noexcept;
double trace(const Matrix& a);
/// max |A_ij - A_ji|; throws for non-square input.
double asymmetry(const Matrix& a);

std::vector<double> diagonal(const Matrix& a);
Matrix diag_matrix(std::span<const double> x);

/// Inverse by Gauss-Jordan elimination with partial pivoting; throws on a
/// numerically singular matrix.
Matrix inverse(const Matrix& a);

/// Solves A x = b (A square, nonsingular) by partial-pivoting elimination.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

} // namespace sg
