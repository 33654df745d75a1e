#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

namespace sg::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

std::string_view to_string(Status s) noexcept;

struct Constraint {
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// Dense LP: optimize objective^T x subject to rows and lower <= x <= upper.
/// Empty `lower`/`upper` mean 0 and +inf for every variable.
struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_vars() const noexcept { return objective.size(); }

  /// Appends a variable (extending existing rows with a zero coefficient) and
  /// returns its index.
  std::size_t add_variable(double cost, double lo = 0.0, double hi = kInf);
  void add_constraint(std::vector<double> coeffs, Relation rel, double rhs);
};

struct Options {
  double feasibility_tol = 1e-8;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-10;
  std::size_t max_iterations = 5'000'000;
};

/// `duals` has one entry per constraint with the convention
/// reduced_costs = objective - A^T duals; for a minimization, >= rows carry
/// nonnegative duals and <= rows nonpositive ones (reversed when maximizing).
/// `dual_value` is the dual objective including variable-bound terms.
struct Solution {
  Status status = Status::infeasible;
  double value = 0.0;
  std::vector<double> point;
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  double dual_value = 0.0;
  std::size_t iterations = 0;
};

/// Two-phase dense tableau simplex. Entering columns follow Dantzig's rule,
/// switching to Bland's smallest-index rule after 50 consecutive degenerate
/// pivots so it cannot cycle; ratio-test ties go to the smallest basic index. Equalities are carried as
/// a pair of opposite inequalities. Throws InputError on dimension mismatch or
/// non-finite data.
Solution solve(const LinearProgram& program, const Options& options = {});

/// Max violation of rows and bounds at `x` (0 when feasible).
double max_violation(const LinearProgram& program, const std::vector<double>& x);

} // namespace sg::lp
