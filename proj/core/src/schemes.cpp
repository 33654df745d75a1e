#include "sg/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "sg/errors.hpp"
#include "sg/linalg.hpp"

namespace sg {

namespace {

// Orthonormal columns spanning one common eigenspace.
using Subspace = Matrix;

Matrix columns(const Matrix& v, std::span<const std::size_t> idx) {
  Matrix out(v.rows(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    for (std::size_t r = 0; r < v.rows(); ++r) {
      out(r, c) = v(r, idx[c]);
    }
  }
  return out;
}

} // namespace

Eigenmatrices eigenmatrices(const IntersectionNumbers& p, std::size_t n) {
  const std::size_t r = p.rank();
  if (r == 0) {
    throw InputError("eigenmatrices: empty scheme");
  }
  std::vector<double> k(r);
  for (std::size_t i = 0; i < r; ++i) {
    k[i] = static_cast<double>(p(i, i, 0));
    if (k[i] <= 0) {
      throw InputError("eigenmatrices: class " + std::to_string(i) + " has zero degree");
    }
  }
  // S_i = D^{1/2} B_i D^{-1/2} is symmetric for symmetric schemes.
  std::vector<Matrix> sym(r);
  double scale = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    const Matrix b = p.intersection_matrix(i);
    scale = std::max(scale, max_abs(b));
    Matrix s(r, r);
    for (std::size_t l = 0; l < r; ++l) {
      for (std::size_t j = 0; j < r; ++j) {
        s(l, j) = std::sqrt(k[l]) * b(l, j) / std::sqrt(k[j]);
      }
    }
    if (asymmetry(s) > 1e-9 * (1.0 + scale)) {
      throw InputError("eigenmatrices: intersection matrices are not symmetrizable "
                       "(scheme is not symmetric)");
    }
    sym[i] = std::move(s);
  }
  const double group_tol = 1e-7 * (1.0 + scale);

  std::vector<Subspace> spaces{Matrix::identity(r)};
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<Subspace> refined;
    for (const auto& v : spaces) {
      if (v.cols() == 1) {
        refined.push_back(v);
        continue;
      }
      const Matrix restricted = v.transposed() * sym[i] * v;
      const auto eig = eig_sym(restricted);
      std::size_t start = 0;
      for (std::size_t c = 1; c <= eig.values.size(); ++c) {
        if (c == eig.values.size() || eig.values[c] - eig.values[c - 1] > group_tol) {
          std::vector<std::size_t> idx(c - start);
          std::iota(idx.begin(), idx.end(), start);
          refined.push_back(v * columns(eig.vectors, idx));
          start = c;
        }
      }
    }
    spaces = std::move(refined);
  }
  if (spaces.size() != r) {
    throw NumericError("eigenmatrices: common eigenspaces not resolved (scheme not commutative?)");
  }

  std::vector<std::vector<double>> rows;
  for (const auto& v : spaces) {
    std::vector<double> row(r);
    for (std::size_t j = 0; j < r; ++j) {
      row[j] = std::sqrt(k[j]) * v(j, 0);
    }
    if (std::abs(row[0]) < 1e-12) {
      throw NumericError("eigenmatrices: eigenvector with vanishing identity component");
    }
    const double lead = row[0];
    for (auto& x : row) {
      x /= lead;
    }
    rows.push_back(std::move(row));
  }

  // trivial row first, then decreasing P_{l1}, ties by descending lexicographic order
  auto trivial_distance = [&](const std::vector<double>& row) {
    double s = 0.0;
    for (std::size_t j = 0; j < r; ++j) {
      s += std::abs(row[j] - k[j]);
    }
    return s;
  };
  const auto trivial = std::min_element(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return trivial_distance(a) < trivial_distance(b);
  });
  std::iter_swap(rows.begin(), trivial);
  rows.front() = k;
  std::sort(rows.begin() + 1, rows.end(), [&](const auto& a, const auto& b) {
    for (std::size_t j = 1; j < r; ++j) {
      if (std::abs(a[j] - b[j]) > group_tol) {
        return a[j] > b[j];
      }
    }
    return false;
  });

  Eigenmatrices out;
  out.P = Matrix(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t j = 0; j < r; ++j) {
      out.P(l, j) = rows[l][j];
    }
    out.P(l, 0) = 1.0;
  }
  out.Q = inverse(out.P) * static_cast<double>(n);
  const auto q0 = out.Q.row(0);
  out.multiplicities.assign(q0.begin(), q0.end());
  return out;
}

std::vector<Matrix> idempotents(const AssociationScheme& s) {
  const std::size_t r = s.config.rank();
  const std::size_t n = s.order();
  std::vector<Matrix> classes;
  classes.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    classes.push_back(s.class_matrix(i));
  }
  std::vector<Matrix> out;
  out.reserve(r);
  for (std::size_t l = 0; l < r; ++l) {
    Matrix e(n, n);
    for (std::size_t i = 0; i < r; ++i) {
      e += classes[i] * (s.Q(i, l) / static_cast<double>(n));
    }
    out.push_back(std::move(e));
  }
  return out;
}

AssociationScheme scheme_from_configuration(const CoherentConfiguration& cfg) {
  const auto& f = cfg.flags();
  if (!f.is_association_scheme()) {
    std::string failed;
    if (!f.homogeneous) failed += " homogeneous";
    if (!f.commutative) failed += " commutative";
    if (!f.symmetric) failed += " symmetric";
    throw InputError("configuration is not an association scheme; failed flag(s):" + failed);
  }
  if (cfg.color(0, 0) != 0) {
    throw InputError("configuration must label the identity relation as class 0");
  }
  const auto& p = cfg.intersection_numbers();
  auto eig = eigenmatrices(p, cfg.order());
  AssociationScheme s{cfg, {}, std::move(eig.P), std::move(eig.Q), std::move(eig.multiplicities), {}};
  s.degrees.resize(cfg.rank());
  for (std::size_t i = 0; i < cfg.rank(); ++i) {
    s.degrees[i] = p(i, i, 0);
  }
  s.idempotents = idempotents(s);
  return s;
}

namespace {

struct DrgCheck {
  std::optional<IntersectionArray> array;
  std::string failure;
};

DrgCheck check_distance_regular(const Graph& g) {
  DrgCheck out;
  const std::size_t n = g.order();
  if (n == 0 || !is_connected(g)) {
    out.failure = "graph is disconnected";
    return out;
  }
  if (g.regular_degree() < 0) {
    out.failure = "graph is not regular";
    return out;
  }
  const auto dist = distance_matrix(g);
  const int diam = *std::max_element(dist.begin(), dist.end());
  const auto d = static_cast<std::size_t>(diam);
  std::vector<std::int64_t> b(d + 1, -1), c(d + 1, -1);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) {
    nbrs[v] = g.neighbors(v);
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const int i = dist[x * n + y];
      std::int64_t up = 0, down = 0;
      for (Vertex z : nbrs[y]) {
        const int dz = dist[x * n + z];
        up += dz == i + 1 ? 1 : 0;
        down += dz == i - 1 ? 1 : 0;
      }
      const auto ui = static_cast<std::size_t>(i);
      if ((b[ui] >= 0 && b[ui] != up) || (c[ui] >= 0 && c[ui] != down)) {
        out.failure = "not distance-regular: pair (" + std::to_string(x) + "," +
                      std::to_string(y) + ") at distance " + std::to_string(i) +
                      " has b=" + std::to_string(up) + ", c=" + std::to_string(down) +
                      " but earlier pairs have b=" + std::to_string(b[ui]) +
                      ", c=" + std::to_string(c[ui]);
        return out;
      }
      b[ui] = up;
      c[ui] = down;
    }
  }
  IntersectionArray ia;
  ia.b.assign(b.begin(), b.begin() + diam);
  ia.c.assign(c.begin() + 1, c.end());
  out.array = std::move(ia);
  return out;
}

} // namespace

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  return check_distance_regular(g).array;
}

DrgScheme scheme_from_drg(const Graph& g) {
  auto check = check_distance_regular(g);
  if (!check.array) {
    throw InputError(check.failure);
  }
  const auto dist = distance_matrix(g);
  std::vector<int> colors(dist.begin(), dist.end());
  CoherentConfiguration cfg(g.order(), std::move(colors));
  return {scheme_from_configuration(cfg), std::move(*check.array)};
}

bool OrthogonalityReport::ok(double tol) const noexcept {
  return pq_residual <= tol && row_relation_residual <= tol && col_relation_residual <= tol &&
         duality_residual <= tol && reconstruction_residual <= tol && idempotent_residual <= tol;
}

OrthogonalityReport check_orthogonality(const AssociationScheme& s) {
  OrthogonalityReport rep;
  const std::size_t r = s.config.rank();
  const double n = static_cast<double>(s.order());
  const Matrix nI = Matrix::identity(r) * n;
  rep.pq_residual = std::max(max_abs_diff(s.P * s.Q, nI), max_abs_diff(s.Q * s.P, nI));
  const auto& m = s.multiplicities;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      double row_sum = 0.0, col_sum = 0.0;
      for (std::size_t l = 0; l < r; ++l) {
        row_sum += s.P(i, l) * s.P(j, l) / static_cast<double>(s.degrees[l]);
        col_sum += s.P(l, i) * s.P(l, j) * m[l];
      }
      const double row_expect = i == j ? n / m[i] : 0.0;
      const double col_expect = i == j ? n * static_cast<double>(s.degrees[i]) : 0.0;
      rep.row_relation_residual = std::max(rep.row_relation_residual, std::abs(row_sum - row_expect));
      rep.col_relation_residual = std::max(rep.col_relation_residual, std::abs(col_sum - col_expect));
      rep.duality_residual = std::max(
          rep.duality_residual,
          std::abs(s.P(j, i) * m[j] - s.Q(i, j) * static_cast<double>(s.degrees[i])));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    Matrix sum(s.order(), s.order());
    for (std::size_t l = 0; l < r; ++l) {
      sum += s.idempotents[l] * s.P(l, i);
    }
    rep.reconstruction_residual =
        std::max(rep.reconstruction_residual, max_abs_diff(sum, s.class_matrix(i)));
  }
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t j = 0; j < r; ++j) {
      const Matrix prod = s.idempotents[l] * s.idempotents[j];
      const Matrix expect = l == j ? s.idempotents[l] : Matrix(s.order(), s.order());
      rep.idempotent_residual = std::max(rep.idempotent_residual, max_abs_diff(prod, expect));
    }
  }
  return rep;
}

EigenRelationReport drg_eigenvalue_relation(const IntersectionArray& ia, const Matrix& P) {
  if (ia.diameter() < 2 || P.rows() < 3 || P.cols() < 3) {
    throw InputError("drg_eigenvalue_relation requires diameter >= 2");
  }
  const double k1 = static_cast<double>(ia.b[0]);
  const double b1 = static_cast<double>(ia.b[1]);
  const double k2 = P(0, 2);
  EigenRelationReport rep;
  for (std::size_t l = 0; l < P.rows(); ++l) {
    const double x = P(l, 1);
    const double rhs = (k2 / (b1 * k1)) * (x * x - (k1 - b1 - 1.0) * x - k1);
    const double res = std::abs(P(l, 2) - rhs);
    rep.residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  rep.pass = rep.max_residual <= 1e-7;
  return rep;
}

WalkRegularityReport walk_regularity(const Graph& g) {
  WalkRegularityReport rep;
  const std::size_t n = g.order();
  if (n == 0) {
    return rep;
  }
  const Matrix adj = g.adjacency();
  rep.minimal_polynomial_degree = distinct_eigenvalues(adj).size();

  __extension__ typedef __int128 Wide;
  std::vector<Wide> power(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    power[i * n + i] = 1;
  }
  const auto edges = g.edges();
  rep.walk_regular = true;
  rep.one_walk_regular = true;
  std::vector<Wide> next(n * n);
  for (std::size_t l = 0; l < rep.minimal_polynomial_degree; ++l) {
    if (l > 0) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Wide s = 0;
          for (std::size_t z = 0; z < n; ++z) {
            if (g.adjacent(static_cast<Vertex>(z), static_cast<Vertex>(y))) {
              if (__builtin_add_overflow(s, power[x * n + z], &s)) {
                throw NumericError("walk_regularity: walk counts overflow");
              }
            }
          }
          next[x * n + y] = s;
        }
      }
      power.swap(next);
    }
    const Wide a = power[0];
    for (std::size_t x = 1; x < n; ++x) {
      if (power[x * n + x] != a) {
        rep.walk_regular = false;
      }
    }
    Wide b = edges.empty() ? 0 : power[edges[0].first * n + edges[0].second];
    for (const auto& [u, v] : edges) {
      if (power[u * n + v] != b) {
        rep.one_walk_regular = false;
      }
    }
    if (!rep.walk_regular) {
      rep.one_walk_regular = false;
      break;
    }
    rep.a.push_back(static_cast<std::int64_t>(a));
    if (!rep.one_walk_regular) {
      break;
    }
    rep.b.push_back(static_cast<std::int64_t>(b));
  }

  if (rep.one_walk_regular) {
    rep.basis.push_back(Matrix::identity(n));
    if (!edges.empty()) {
      rep.basis.push_back(adj);
    }
    Matrix pw = Matrix::identity(n);
    for (std::size_t l = 1; l < rep.minimal_polynomial_degree; ++l) {
      pw = pw * adj;
      if (l < 2) {
        continue;
      }
      Matrix al = pw - Matrix::identity(n) * static_cast<double>(rep.a[l]) -
                  adj * static_cast<double>(rep.b[l]);
      for (std::size_t j = 2; j < rep.basis.size(); ++j) {
        const auto& prev = rep.basis[j];
        al -= prev * (inner(al, prev) / inner(prev, prev));
      }
      if (frobenius_norm(al) > 1e-9 * (1.0 + frobenius_norm(pw))) {
        rep.basis.push_back(std::move(al));
      }
    }
  }
  return rep;
}

} // namespace sg
