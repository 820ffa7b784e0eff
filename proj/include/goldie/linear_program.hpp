#pragma once

#include <cstddef>
#include <optional>

#include "goldie/matrix.hpp"

namespace goldie {

/// Linear program over free rational variables: equality rows, `<=` rows, and an
/// optional objective to maximize. Without an objective it is a feasibility query.
struct LinearProgram {
  explicit LinearProgram(std::size_t vars) : num_vars(vars), eq_lhs(0, vars), le_lhs(0, vars) {}

  std::size_t num_vars;
  RatMatrix eq_lhs;
  RatVector eq_rhs;
  RatMatrix le_lhs;
  RatVector le_rhs;
  std::optional<RatVector> objective;

  void add_equality(const RatVector& row, const Rational& rhs);
  void add_less_equal(const RatVector& row, const Rational& rhs);
  /// Stored as the negated `<=` row.
  void add_greater_equal(const RatVector& row, const Rational& rhs);
  void add_lower_bound(std::size_t var, const Rational& bound);
  void add_upper_bound(std::size_t var, const Rational& bound);
  void maximize(RatVector c) { objective = std::move(c); }
  void minimize(const RatVector& c) { objective = Rational(-1) * c; }
};

enum class LpStatus { Infeasible, Optimal, Unbounded, Feasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  /// Objective value at `point` (maximization sense); zero for feasibility queries.
  Rational value;
  RatVector point;
};

/// Two-phase dense simplex in exact arithmetic with Bland's least-index rule.
/// Returned points satisfy every constraint exactly.
LpResult lp_solve(const LinearProgram& program);

/// True iff the point satisfies every row of the program exactly.
bool satisfies(const LinearProgram& program, const RatVector& point);

}  // namespace goldie
