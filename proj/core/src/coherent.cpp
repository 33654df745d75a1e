#include "sg/coherent.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "sg/errors.hpp"

namespace sg {

Matrix IntersectionNumbers::intersection_matrix(std::size_t i) const {
  Matrix b(rank_, rank_);
  for (std::size_t l = 0; l < rank_; ++l) {
    for (std::size_t j = 0; j < rank_; ++j) {
      b(l, j) = static_cast<double>((*this)(i, j, l));
    }
  }
  return b;
}

namespace {

struct Structure {
  AxiomReport report;
  std::vector<std::size_t> transpose;
  std::vector<std::size_t> fibers;
  IntersectionNumbers p;
};

Structure analyze(std::size_t n, std::span<const int> colors) {
  Structure s;
  if (colors.size() != n * n || n == 0) {
    return s;
  }
  const int max_color = *std::max_element(colors.begin(), colors.end());
  if (*std::min_element(colors.begin(), colors.end()) < 0) {
    return s;
  }
  const std::size_t r = static_cast<std::size_t>(max_color) + 1;
  std::vector<std::size_t> count(r, 0);
  for (int c : colors) {
    ++count[static_cast<std::size_t>(c)];
  }
  s.report.partition = std::none_of(count.begin(), count.end(), [](std::size_t c) { return c == 0; });
  if (!s.report.partition) {
    return s;
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  s.transpose.assign(r, kUnset);
  bool transpose_ok = true;
  std::vector<int> on_diag(r, -1); // -1 unseen, 1 diagonal, 0 off-diagonal, 2 mixed
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto c = static_cast<std::size_t>(colors[x * n + y]);
      const auto ct = static_cast<std::size_t>(colors[y * n + x]);
      if (s.transpose[c] == kUnset) {
        s.transpose[c] = ct;
      } else if (s.transpose[c] != ct) {
        transpose_ok = false;
      }
      const int kind = x == y ? 1 : 0;
      if (on_diag[c] == -1) {
        on_diag[c] = kind;
      } else if (on_diag[c] != kind) {
        on_diag[c] = 2;
      }
    }
  }
  s.report.transpose_closed = transpose_ok;
  s.report.diagonal_classes = std::none_of(on_diag.begin(), on_diag.end(), [](int k) { return k == 2; });
  for (std::size_t c = 0; c < r; ++c) {
    if (on_diag[c] == 1) {
      s.fibers.push_back(c);
    }
  }
  if (!transpose_ok || !s.report.diagonal_classes) {
    return s;
  }

  // representative counts per class, then verify every pair
  s.p = IntersectionNumbers(r);
  std::vector<bool> have_rep(r, false);
  std::vector<std::int64_t> buf(r * r, 0);
  std::vector<std::size_t> touched;
  touched.reserve(n);
  bool constant = true;
  for (std::size_t x = 0; x < n && constant; ++x) {
    for (std::size_t y = 0; y < n && constant; ++y) {
      const auto l = static_cast<std::size_t>(colors[x * n + y]);
      touched.clear();
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t key = static_cast<std::size_t>(colors[x * n + z]) * r +
                                static_cast<std::size_t>(colors[z * n + y]);
        if (buf[key]++ == 0) {
          touched.push_back(key);
        }
      }
      if (!have_rep[l]) {
        have_rep[l] = true;
        for (std::size_t key : touched) {
          s.p(key / r, key % r, l) = buf[key];
        }
      } else {
        for (std::size_t key : touched) {
          if (s.p(key / r, key % r, l) != buf[key]) {
            constant = false;
          }
        }
      }
      for (std::size_t key : touched) {
        buf[key] = 0;
      }
    }
  }
  s.report.constant_products = constant;
  return s;
}

} // namespace

AxiomReport verify_axioms(std::size_t n, std::span<const int> colors) {
  return analyze(n, colors).report;
}

CoherentConfiguration::CoherentConfiguration(std::size_t n, std::vector<int> colors)
    : n_(n), colors_(std::move(colors)) {
  Structure s = analyze(n_, colors_);
  if (!s.report.all()) {
    std::string failed;
    if (!s.report.partition) failed += " partition";
    if (!s.report.transpose_closed) failed += " transpose";
    if (!s.report.diagonal_classes) failed += " diagonal";
    if (!s.report.constant_products) failed += " products";
    throw NumericError("not coherent: axiom check failed:" + failed);
  }
  const std::size_t r = s.transpose.size();
  cells_.assign(r, {});
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    cells_[static_cast<std::size_t>(colors_[i])].push_back(static_cast<std::uint32_t>(i));
  }
  transpose_ = std::move(s.transpose);
  fibers_ = std::move(s.fibers);
  p_ = std::move(s.p);

  flags_.homogeneous = fibers_.size() == 1;
  flags_.symmetric = true;
  for (std::size_t i = 0; i < r; ++i) {
    if (transpose_[i] != i) {
      flags_.symmetric = false;
    }
  }
  flags_.commutative = true;
  for (std::size_t i = 0; i < r && flags_.commutative; ++i) {
    for (std::size_t j = i + 1; j < r && flags_.commutative; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        if (p_(i, j, l) != p_(j, i, l)) {
          flags_.commutative = false;
          break;
        }
      }
    }
  }
}

Matrix CoherentConfiguration::class_matrix(std::size_t i) const {
  Matrix a(n_, n_);
  for (std::uint32_t pos : cells_[i]) {
    a(pos / n_, pos % n_) = 1.0;
  }
  return a;
}

CoherentConfiguration coherent_closure(std::span<const Matrix> seeds) {
  if (seeds.empty()) {
    throw InputError("coherent_closure: no seed matrices");
  }
  const std::size_t n = seeds.front().rows();
  for (const auto& s : seeds) {
    if (!s.square() || s.rows() != n) {
      throw InputError("coherent_closure: seeds must share one square dimension");
    }
    for (double v : s.data()) {
      if (v != 0.0 && v != 1.0) {
        throw InputError("coherent_closure: seeds must be 0/1 matrices");
      }
    }
  }
  if (n == 0) {
    throw InputError("coherent_closure: empty ground set");
  }

  // initial colors: diagonal flag plus the seed bit pattern at (x,y) and (y,x)
  std::vector<int> colors(n * n);
  {
    std::map<std::vector<std::uint8_t>, int> ids;
    std::vector<std::uint8_t> key(1 + 2 * seeds.size());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        key[0] = x == y ? 1 : 0;
        for (std::size_t s = 0; s < seeds.size(); ++s) {
          key[1 + 2 * s] = seeds[s](x, y) != 0.0 ? 1 : 0;
          key[2 + 2 * s] = seeds[s](y, x) != 0.0 ? 1 : 0;
        }
        const auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
        colors[x * n + y] = it->second;
      }
    }
  }
  std::size_t num_colors = *std::max_element(colors.begin(), colors.end()) + 1u;

  const std::size_t max_rounds = n * n + 1;
  std::vector<std::int64_t> sig;
  sig.reserve(n + 2);
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) {
      throw NumericError("coherent_closure: refinement exceeded n^2 rounds");
    }
    std::map<std::vector<std::int64_t>, int> ids;
    std::vector<int> next(n * n);
    const auto width = static_cast<std::int64_t>(num_colors);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        sig.clear();
        sig.push_back(colors[x * n + y]);
        sig.push_back(colors[y * n + x]);
        const std::size_t base = sig.size();
        for (std::size_t z = 0; z < n; ++z) {
          sig.push_back(static_cast<std::int64_t>(colors[x * n + z]) * width + colors[z * n + y]);
        }
        std::sort(sig.begin() + static_cast<long>(base), sig.end());
        const auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
        next[x * n + y] = it->second;
      }
    }
    const std::size_t next_count = ids.size();
    colors = std::move(next);
    if (next_count == num_colors) {
      break;
    }
    num_colors = next_count;
  }
  return CoherentConfiguration(n, std::move(colors));
}

ConfigurationFlags classify(const CoherentConfiguration& cfg) { return cfg.flags(); }

const IntersectionNumbers& intersection_numbers(const CoherentConfiguration& cfg) {
  return cfg.intersection_numbers();
}

std::string_view Membership::kind_name(Kind k) noexcept {
  switch (k) {
  case Kind::belongs:
    return "belongs";
  case Kind::splits:
    return "splits";
  case Kind::neither:
    return "neither";
  }
  return "neither";
}

std::optional<std::vector<std::size_t>> class_decomposition(const CoherentConfiguration& cfg,
                                                            const Matrix& a) {
  const std::size_t n = cfg.order();
  if (a.rows() != n || a.cols() != n) {
    throw InputError("membership: dimension mismatch");
  }
  std::vector<std::size_t> classes;
  std::vector<std::uint8_t> seen(cfg.rank(), 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (a(x, y) != 0.0) {
        const auto c = static_cast<std::size_t>(cfg.color(x, y));
        if (!seen[c]) {
          seen[c] = 1;
          classes.push_back(c);
        }
      }
    }
  }
  for (std::size_t c : classes) {
    for (std::uint32_t pos : cfg.cells(c)) {
      if (a(pos / n, pos % n) != 1.0) {
        return std::nullopt;
      }
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

Membership membership(const CoherentConfiguration& cfg, const Matrix& a) {
  const auto parts = class_decomposition(cfg, a);
  Membership m;
  if (!parts) {
    return m;
  }
  if (parts->size() == 1) {
    m.kind = Membership::Kind::belongs;
    m.index = parts->front();
  } else if (parts->size() == 2) {
    const std::size_t i = (*parts)[0];
    if (cfg.transpose_of(i) == (*parts)[1]) {
      m.kind = Membership::Kind::splits;
      m.index = i;
    }
  }
  return m;
}

Matrix project(const CoherentConfiguration& cfg, const Matrix& m) {
  const std::size_t n = cfg.order();
  if (m.rows() != n || m.cols() != n) {
    throw InputError("project: dimension mismatch");
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < cfg.rank(); ++i) {
    const auto cells = cfg.cells(i);
    double sum = 0.0;
    for (std::uint32_t pos : cells) {
      sum += m(pos / n, pos % n);
    }
    const double avg = sum / static_cast<double>(cells.size());
    for (std::uint32_t pos : cells) {
      out(pos / n, pos % n) = avg;
    }
  }
  return out;
}

} // namespace sg
