#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sg/graphs.hpp"
#include "sg/matrix.hpp"

namespace sg::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

/// Circulant graph on Z_n with connection set {+-s : s in steps}.
inline Graph circulant(std::size_t n, const std::vector<std::size_t>& steps) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t s : steps) {
      const auto v = static_cast<Vertex>((u + s) % n);
      if (u != v && !g.adjacent(u, v)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

inline std::vector<int> signs_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<int> x(n);
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = (mask >> v) & 1u ? -1 : 1;
  }
  return x;
}

/// Random n x n correlation-like matrix: Gram matrix of random unit vectors.
inline Matrix random_correlation(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> v(n, std::vector<double>(dim));
  for (auto& row : v) {
    double norm = 0.0;
    for (double& c : row) {
      c = normal(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    for (double& c : row) {
      c /= norm;
    }
  }
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        s += v[i][c] * v[j][c];
      }
      m(i, j) = i == j ? 1.0 : s;
    }
  }
  return m;
}

} // namespace sg::testing
