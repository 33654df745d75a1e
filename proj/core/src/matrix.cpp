#include "sg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("Matrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

Matrix Matrix::ones(std::size_t n) { return Matrix(n, n, 1.0); }

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "Matrix::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "Matrix::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= other.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
  for (auto& v : data_) {
    v *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("Matrix product: inner dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("Matrix-vector product: dimension mismatch");
  }
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      s += a(i, j) * x[j];
    }
    out[i] = s;
  }
  return out;
}

double inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "inner");
  double s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    s += da[i] * db[i];
  }
  return s;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = a(r, c) * b(r, c);
    }
  }
  return out;
}

double max_abs(const Matrix& a) noexcept {
  double m = 0.0;
  for (double v : a.data()) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    m = std::max(m, std::abs(da[i] - db[i]));
  }
  return m;
}

double frobenius_norm(const Matrix& a) noexcept {
  double s = 0.0;
  for (double v : a.data()) {
    s += v * v;
  }
  return std::sqrt(s);
}

double inf_norm(const Matrix& a) noexcept {
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    for (double v : a.row(r)) {
      s += std::abs(v);
    }
    m = std::max(m, s);
  }
  return m;
}

double trace(const Matrix& a) {
  if (!a.square()) {
    throw std::invalid_argument("trace: matrix is not square");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += a(i, i);
  }
  return s;
}

double asymmetry(const Matrix& a) {
  if (!a.square()) {
    throw std::invalid_argument("asymmetry: matrix is not square");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - a(j, i)));
    }
  }
  return m;
}

std::vector<double> diagonal(const Matrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
  }
  return d;
}

Matrix diag_matrix(std::span<const double> x) {
  Matrix m(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    m(i, i) = x[i];
  }
  return m;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) {
    throw std::invalid_argument("inverse: matrix is not square");
  }
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) {
        pivot = r;
      }
    }
    if (std::abs(work(pivot, col)) <= 1e-13 * scale) {
      throw std::domain_error("inverse: matrix is numerically singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const double p = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) {
        continue;
      }
      const double f = work(r, col);
      if (f == 0.0) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  if (!a.square() || a.rows() != b.size()) {
    throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) {
        pivot = r;
      }
    }
    if (std::abs(a(pivot, col)) <= 1e-13 * scale) {
      throw std::domain_error("solve_linear: matrix is numerically singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
      }
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) {
        continue;
      }
      for (std::size_t c = col; c < n; ++c) {
        a(r, c) -= f * a(col, c);
      }
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) {
      s -= a(i, c) * x[c];
    }
    x[i] = s / a(i, i);
  }
  return x;
}

} // namespace sg
