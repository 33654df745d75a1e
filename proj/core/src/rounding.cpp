#include "sg/rounding.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sg/errors.hpp"

namespace sg {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

RoundingResult round_hyperplane(const std::vector<std::vector<double>>& vectors, const Matrix& L,
                                const Matrix& K, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = vectors.size();
  if (trials == 0) {
    throw InputError("round_hyperplane: trials must be at least 1");
  }
  if (L.rows() != n || L.cols() != n || (!K.empty() && (K.rows() != n || K.cols() != n))) {
    throw InputError("round_hyperplane: operator dimension does not match the vector count");
  }
  const std::size_t dim = n == 0 ? 0 : vectors.front().size();
  for (std::size_t v = 0; v < n; ++v) {
    if (vectors[v].size() != dim) {
      throw InputError("round_hyperplane: vectors have different dimensions");
    }
    double norm = 0.0;
    for (double c : vectors[v]) {
      norm += c * c;
    }
    if (std::abs(std::sqrt(norm) - 1.0) > 1e-6) {
      throw InputError("round_hyperplane: vector " + std::to_string(v) + " is not unit length");
    }
  }

  // objective matrix W with value = <W, xx^T>
  Matrix W = K.empty() ? L * 0.25 : (L + K) * 0.5;

  RoundingResult out;
  out.trials = trials;
  out.seed = seed;
  out.best_value = -INFINITY;
  std::vector<double> r(dim);
  std::vector<int> x(n);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    for (std::size_t c = 0; c < dim; c += 2) {
      const double u1 = uniform01(rng);
      const double u2 = uniform01(rng);
      const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
      r[c] = radius * std::cos(2.0 * std::numbers::pi * u2);
      if (c + 1 < dim) {
        r[c + 1] = radius * std::sin(2.0 * std::numbers::pi * u2);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      double dot = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        dot += vectors[v][c] * r[c];
      }
      x[v] = dot < 0.0 ? -1 : 1;
    }
    double value = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        value += W(u, v) * x[u] * x[v];
      }
    }
    sum += value;
    sum_sq += value * value;
    if (value > out.best_value) {
      out.best_value = value;
      out.best_assignment = x;
    }
  }
  const double tn = static_cast<double>(trials);
  out.mean = sum / tn;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - tn * out.mean * out.mean) / (tn - 1.0));
    out.std_error = std::sqrt(var / tn);
  }
  return out;
}

} // namespace sg
