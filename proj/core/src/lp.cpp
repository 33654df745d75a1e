#include "sg/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sg/errors.hpp"

namespace sg::lp {

std::string_view to_string(Status s) noexcept {
  switch (s) {
  case Status::optimal:
    return "optimal";
  case Status::infeasible:
    return "infeasible";
  case Status::unbounded:
    return "unbounded";
  }
  return "unknown";
}

std::size_t LinearProgram::add_variable(double cost, double lo, double hi) {
  if (lower.empty() && upper.empty()) {
    lower.assign(objective.size(), 0.0);
    upper.assign(objective.size(), kInf);
  }
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  for (auto& c : constraints) {
    c.coeffs.push_back(0.0);
  }
  return objective.size() - 1;
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel, double rhs) {
  constraints.push_back({std::move(coeffs), rel, rhs});
}

namespace {

enum class VarKind { shifted, negated, split };

struct VarMap {
  VarKind kind;
  std::size_t col;     // x' (or x+ for split)
  std::size_t col_neg; // x- for split
};

struct StdRow {
  std::vector<double> coeffs; // over structural std columns
  bool less_equal;
  double rhs;
  long origin; // original constraint index, -1 for an upper-bound row
  double sign; // +1, or -1 if negated during normalization
};

class Tableau {
public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1), 0.0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t_[r * (n_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, n_); }
  double rhs(std::size_t r) const { return at(r, n_); }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<double>& reduced, double& obj) {
    double* prow = &t_[pr * (n_ + 1)];
    const double p = prow[pc];
    for (std::size_t c = 0; c <= n_; ++c) {
      prow[c] /= p;
    }
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr) {
        continue;
      }
      double* row = &t_[r * (n_ + 1)];
      const double f = row[pc];
      if (f == 0.0) {
        continue;
      }
      for (std::size_t c = 0; c <= n_; ++c) {
        row[c] -= f * prow[c];
      }
      row[pc] = 0.0;
    }
    const double f = reduced[pc];
    if (f != 0.0) {
      for (std::size_t c = 0; c < n_; ++c) {
        reduced[c] -= f * prow[c];
      }
      obj += f * prow[n_];
      reduced[pc] = 0.0;
    }
  }

private:
  std::size_t m_;
  std::size_t n_;
  std::vector<double> t_;
};

enum class PhaseResult { optimal, unbounded };

constexpr std::size_t kDegenerateRun = 50;

class Simplex {
public:
  Simplex(Tableau& t, std::vector<std::size_t>& basis, const Options& opt, std::size_t& iters)
      : t_(t), basis_(basis), opt_(opt), iters_(iters) {}

  // Minimizes cost^T x over the current basis; columns with allowed[c] == 0
  // never enter. On return `reduced` holds c_j - c_B B^-1 a_j and `obj` the
  // objective value.
  PhaseResult run(const std::vector<double>& cost, const std::vector<std::uint8_t>& allowed,
                  std::vector<double>& reduced, double& obj) {
    const std::size_t m = t_.rows();
    const std::size_t n = t_.cols();
    reduced = cost;
    obj = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        reduced[c] -= cb * t_.at(r, c);
      }
      obj += cb * t_.rhs(r);
    }
    std::size_t degenerate_run = 0;
    for (;;) {
      if (++iters_ > opt_.max_iterations) {
        throw NumericError("simplex: iteration limit exceeded");
      }
      // Dantzig's rule while making progress; Bland's rule after a run of
      // degenerate pivots, which rules out cycling.
      const bool bland = degenerate_run >= kDegenerateRun;
      std::size_t enter = n;
      double most = -opt_.optimality_tol;
      for (std::size_t c = 0; c < n; ++c) {
        if (allowed[c] != 0 && reduced[c] < most) {
          enter = c;
          if (bland) {
            break;
          }
          most = reduced[c];
        }
      }
      if (enter == n) {
        return PhaseResult::optimal;
      }
      std::size_t leave = m;
      double best = 0.0;
      for (std::size_t r = 0; r < m; ++r) {
        const double a = t_.at(r, enter);
        if (a <= opt_.pivot_tol) {
          continue;
        }
        const double ratio = std::max(0.0, t_.rhs(r)) / a;
        if (leave == m) {
          leave = r;
          best = ratio;
          continue;
        }
        const double slack = 1e-12 * (1.0 + std::abs(best));
        if (ratio < best - slack) {
          leave = r;
          best = ratio;
        } else if (ratio <= best + slack && basis_[r] < basis_[leave]) {
          leave = r;
          best = std::min(best, ratio);
        }
      }
      if (leave == m) {
        return PhaseResult::unbounded;
      }
      degenerate_run = best <= opt_.feasibility_tol ? degenerate_run + 1 : 0;
      t_.pivot(leave, enter, reduced, obj);
      basis_[leave] = enter;
    }
  }

private:
  Tableau& t_;
  std::vector<std::size_t>& basis_;
  const Options& opt_;
  std::size_t& iters_;
};

void validate(const LinearProgram& p) {
  const std::size_t n = p.num_vars();
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(p.objective.begin(), p.objective.end(), finite)) {
    throw InputError("lp: non-finite objective coefficient");
  }
  for (std::size_t r = 0; r < p.constraints.size(); ++r) {
    const auto& c = p.constraints[r];
    if (c.coeffs.size() != n) {
      throw InputError("lp: constraint " + std::to_string(r) + " has " +
                       std::to_string(c.coeffs.size()) + " coefficients, expected " +
                       std::to_string(n));
    }
    if (!std::all_of(c.coeffs.begin(), c.coeffs.end(), finite) || !std::isfinite(c.rhs)) {
      throw InputError("lp: non-finite data in constraint " + std::to_string(r));
    }
  }
  if (!p.lower.empty() || !p.upper.empty()) {
    if (p.lower.size() != n || p.upper.size() != n) {
      throw InputError("lp: bound vectors do not match the variable count");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (std::isnan(p.lower[j]) || std::isnan(p.upper[j]) || p.lower[j] == kInf ||
          p.upper[j] == -kInf) {
        throw InputError("lp: invalid bounds for variable " + std::to_string(j));
      }
    }
  }
}

} // namespace

double max_violation(const LinearProgram& p, const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& c : p.constraints) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      lhs += c.coeffs[j] * x[j];
    }
    switch (c.relation) {
    case Relation::less_equal:
      worst = std::max(worst, lhs - c.rhs);
      break;
    case Relation::greater_equal:
      worst = std::max(worst, c.rhs - lhs);
      break;
    case Relation::equal:
      worst = std::max(worst, std::abs(lhs - c.rhs));
      break;
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double lo = p.lower.empty() ? 0.0 : p.lower[j];
    const double hi = p.upper.empty() ? kInf : p.upper[j];
    worst = std::max({worst, lo - x[j], x[j] - hi});
  }
  return worst;
}

Solution solve(const LinearProgram& program, const Options& opt) {
  validate(program);
  const std::size_t n = program.num_vars();
  const std::size_t m0 = program.constraints.size();
  auto lower = [&](std::size_t j) { return program.lower.empty() ? 0.0 : program.lower[j]; };
  auto upper = [&](std::size_t j) { return program.upper.empty() ? kInf : program.upper[j]; };

  // --- variable substitution into nonnegative standard columns
  std::vector<VarMap> vmap(n);
  std::size_t ns = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(lower(j))) {
      vmap[j] = {VarKind::shifted, ns++, 0};
    } else if (std::isfinite(upper(j))) {
      vmap[j] = {VarKind::negated, ns++, 0};
    } else {
      vmap[j] = {VarKind::split, ns, ns + 1};
      ns += 2;
    }
  }

  std::vector<StdRow> rows;
  auto push_row = [&](std::vector<double> coeffs, bool le, double rhs, long origin) {
    double sign = 1.0;
    if (rhs < 0.0 || (!le && rhs == 0.0)) {
      for (auto& v : coeffs) {
        v = -v;
      }
      rhs = -rhs;
      le = !le;
      sign = -1.0;
    }
    rows.push_back({std::move(coeffs), le, rhs, origin, sign});
  };

  for (std::size_t r = 0; r < m0; ++r) {
    const auto& c = program.constraints[r];
    std::vector<double> coeffs(ns, 0.0);
    double rhs = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = c.coeffs[j];
      if (a == 0.0) {
        continue;
      }
      switch (vmap[j].kind) {
      case VarKind::shifted:
        coeffs[vmap[j].col] += a;
        rhs -= a * lower(j);
        break;
      case VarKind::negated:
        coeffs[vmap[j].col] -= a;
        rhs -= a * upper(j);
        break;
      case VarKind::split:
        coeffs[vmap[j].col] += a;
        coeffs[vmap[j].col_neg] -= a;
        break;
      }
    }
    const long origin = static_cast<long>(r);
    if (c.relation == Relation::equal) {
      push_row(coeffs, true, rhs, origin);
      push_row(std::move(coeffs), false, rhs, origin);
    } else {
      push_row(std::move(coeffs), c.relation == Relation::less_equal, rhs, origin);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (vmap[j].kind == VarKind::shifted && std::isfinite(upper(j))) {
      std::vector<double> coeffs(ns, 0.0);
      coeffs[vmap[j].col] = 1.0;
      push_row(std::move(coeffs), true, upper(j) - lower(j), -1);
    }
  }

  // --- tableau: [structural | slack/surplus | artificial | rhs]
  const std::size_t m = rows.size();
  std::size_t n_art = 0;
  for (const auto& r : rows) {
    n_art += r.less_equal ? 0 : 1;
  }
  const std::size_t slack0 = ns;
  const std::size_t art0 = ns + m;
  const std::size_t total = ns + m + n_art;
  Tableau t(m, total);
  std::vector<std::size_t> basis(m);
  std::vector<std::size_t> identity_col(m);
  {
    std::size_t a = art0;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < ns; ++c) {
        t.at(r, c) = rows[r].coeffs[c];
      }
      t.rhs(r) = rows[r].rhs;
      if (rows[r].less_equal) {
        t.at(r, slack0 + r) = 1.0;
        basis[r] = slack0 + r;
        identity_col[r] = slack0 + r;
      } else {
        t.at(r, slack0 + r) = -1.0;
        t.at(r, a) = 1.0;
        basis[r] = a;
        identity_col[r] = a;
        ++a;
      }
    }
  }

  Solution sol;
  std::vector<double> reduced;
  double obj = 0.0;
  Simplex simplex(t, basis, opt, sol.iterations);

  double rhs_scale = 1.0;
  for (const auto& r : rows) {
    rhs_scale = std::max(rhs_scale, std::abs(r.rhs));
  }

  if (n_art > 0) {
    std::vector<double> cost1(total, 0.0);
    std::fill(cost1.begin() + static_cast<long>(art0), cost1.end(), 1.0);
    std::vector<std::uint8_t> allowed(total, 1);
    simplex.run(cost1, allowed, reduced, obj);
    if (obj > opt.feasibility_tol * rhs_scale) {
      sol.status = Status::infeasible;
      return sol;
    }
    // drive zero-level artificials out of the basis where possible
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < art0) {
        continue;
      }
      std::size_t best = total;
      double best_abs = opt.pivot_tol;
      for (std::size_t c = 0; c < art0; ++c) {
        if (std::abs(t.at(r, c)) > best_abs) {
          best = c;
          best_abs = std::abs(t.at(r, c));
          break;
        }
      }
      if (best < total) {
        t.pivot(r, best, reduced, obj);
        basis[r] = best;
      }
    }
  }

  std::vector<double> cost2(total, 0.0);
  const double dir = program.sense == Sense::minimize ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double c = dir * program.objective[j];
    switch (vmap[j].kind) {
    case VarKind::shifted:
      cost2[vmap[j].col] = c;
      break;
    case VarKind::negated:
      cost2[vmap[j].col] = -c;
      break;
    case VarKind::split:
      cost2[vmap[j].col] = c;
      cost2[vmap[j].col_neg] = -c;
      break;
    }
  }
  std::vector<std::uint8_t> allowed2(total, 1);
  std::fill(allowed2.begin() + static_cast<long>(art0), allowed2.end(), 0);
  if (simplex.run(cost2, allowed2, reduced, obj) == PhaseResult::unbounded) {
    sol.status = Status::unbounded;
    return sol;
  }

  // --- primal recovery
  std::vector<double> xs(total, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    xs[basis[r]] = std::max(0.0, t.rhs(r));
  }
  sol.point.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    switch (vmap[j].kind) {
    case VarKind::shifted:
      sol.point[j] = lower(j) + xs[vmap[j].col];
      break;
    case VarKind::negated:
      sol.point[j] = upper(j) - xs[vmap[j].col];
      break;
    case VarKind::split:
      sol.point[j] = xs[vmap[j].col] - xs[vmap[j].col_neg];
      break;
    }
  }
  sol.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sol.value += program.objective[j] * sol.point[j];
  }

  // --- dual recovery: identity column of row r has zero cost, so its reduced
  // cost is -y_r.
  sol.duals.assign(m0, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].origin < 0) {
      continue;
    }
    const double y_std = -reduced[identity_col[r]];
    sol.duals[static_cast<std::size_t>(rows[r].origin)] += dir * rows[r].sign * y_std;
  }
  sol.reduced_costs = program.objective;
  double dual = 0.0;
  for (std::size_t r = 0; r < m0; ++r) {
    const auto& c = program.constraints[r];
    dual += c.rhs * sol.duals[r];
    for (std::size_t j = 0; j < n; ++j) {
      sol.reduced_costs[j] -= c.coeffs[j] * sol.duals[r];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double rc = sol.reduced_costs[j];
    // minimization: positive reduced cost pins x_j at its lower bound
    const bool at_lower = program.sense == Sense::minimize ? rc > 0.0 : rc < 0.0;
    const double bound = at_lower ? lower(j) : upper(j);
    if (std::isfinite(bound)) {
      dual += rc * bound;
    }
  }
  sol.dual_value = dual;
  sol.status = Status::optimal;
  return sol;
}

} // namespace sg::lp
