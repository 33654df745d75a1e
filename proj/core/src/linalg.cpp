#include "sg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sg/errors.hpp"

namespace sg {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) {
        s += a(i, j) * a(i, j);
      }
    }
  }
  return std::sqrt(s);
}

} // namespace

EigenDecomposition eig_sym(const Matrix& m) {
  if (!m.square()) {
    throw InputError("eig_sym: matrix is not square");
  }
  if (asymmetry(m) > 1e-9) {
    throw InputError("eig_sym: matrix is not symmetric");
  }
  const std::size_t n = m.rows();
  Matrix a = m;
  // symmetrize exactly so rotations see a consistent matrix
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  }
  Matrix v = Matrix::identity(n);
  const double target = 1e-12 * frobenius_norm(m);

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > target && off_diagonal_norm(a) > 1e-300) {
    throw NumericError("eig_sym: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) {
      out.vectors(r, c) = v(r, order[c]);
    }
  }
  return out;
}

double lambda_min(const Matrix& m) { return eig_sym(m).min(); }

bool is_psd(const Matrix& m, double tol) {
  if (m.rows() == 0) {
    return true;
  }
  return lambda_min(m) >= -tol;
}

std::vector<double> distinct_eigenvalues(const Matrix& m) {
  const auto eig = eig_sym(m);
  const double tol = 1e-7 * (1.0 + inf_norm(m));
  std::vector<double> out;
  for (double v : eig.values) {
    if (out.empty() || v - out.back() > tol) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<double>> gram_factor(const Matrix& m, double tol) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i) - 1.0) > tol) {
      throw InputError("gram_factor: diagonal entry differs from 1");
    }
  }
  const auto eig = eig_sym(m);
  if (n > 0 && eig.min() < -tol) {
    throw InputError("gram_factor: not PSD");
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n; ++c) {
    if (eig.values[c] > tol) {
      keep.push_back(c);
    }
  }
  std::vector<std::vector<double>> vecs(n, std::vector<double>(keep.size()));
  for (std::size_t i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const std::size_t c = keep[k];
      vecs[i][k] = eig.vectors(i, c) * std::sqrt(eig.values[c]);
      norm2 += vecs[i][k] * vecs[i][k];
    }
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) {
      throw NumericError("gram_factor: zero row in factor");
    }
    for (auto& x : vecs[i]) {
      x /= norm;
    }
  }
  return vecs;
}

Matrix project_orthogonal(const Matrix& m, std::span<const Matrix> basis) {
  Matrix out(m.rows(), m.cols());
  for (const auto& b : basis) {
    const double bb = inner(b, b);
    if (bb == 0.0) {
      continue;
    }
    out += b * (inner(m, b) / bb);
  }
  return out;
}

} // namespace sg
