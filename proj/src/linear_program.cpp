#include "goldie/linear_program.hpp"

#include <algorithm>

#include "goldie/error.hpp"

namespace goldie {

void LinearProgram::add_equality(const RatVector& row, const Rational& rhs) {
  eq_lhs.append_row(row);
  eq_rhs.push_back(rhs);
}

void LinearProgram::add_less_equal(const RatVector& row, const Rational& rhs) {
  le_lhs.append_row(row);
  le_rhs.push_back(rhs);
}

void LinearProgram::add_greater_equal(const RatVector& row, const Rational& rhs) {
  add_less_equal(Rational(-1) * row, -rhs);
}

void LinearProgram::add_lower_bound(std::size_t var, const Rational& bound) {
  RatVector row(num_vars);
  row.at(var) = 1;
  add_greater_equal(row, bound);
}

void LinearProgram::add_upper_bound(std::size_t var, const Rational& bound) {
  RatVector row(num_vars);
  row.at(var) = 1;
  add_less_equal(row, bound);
}

namespace {

// Standard-form tableau. Column layout: [x+ (n) | x- (n) | slacks (le rows) | artificials (all rows)].
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : n_(lp.num_vars),
        slacks_(lp.le_lhs.rows()),
        rows_(lp.eq_lhs.rows() + lp.le_lhs.rows()),
        cols_(2 * n_ + slacks_ + rows_),
        a_(rows_, cols_),
        rhs_(rows_),
        basis_(rows_),
        active_(rows_, true) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool is_eq = i < lp.eq_lhs.rows();
      const std::size_t src = is_eq ? i : i - lp.eq_lhs.rows();
      const RatMatrix& lhs = is_eq ? lp.eq_lhs : lp.le_lhs;
      Rational b = is_eq ? lp.eq_rhs[src] : lp.le_rhs[src];
      const Rational sign = b < 0 ? -1 : 1;
      for (std::size_t k = 0; k < n_; ++k) {
        a_(i, k) = sign * lhs(src, k);
        a_(i, n_ + k) = -sign * lhs(src, k);
      }
      if (!is_eq) a_(i, 2 * n_ + src) = sign;
      a_(i, artificial(i)) = 1;
      rhs_[i] = sign * b;
      basis_[i] = artificial(i);
    }
  }

  std::size_t artificial(std::size_t row) const { return 2 * n_ + slacks_ + row; }
  bool is_artificial(std::size_t col) const { return col >= 2 * n_ + slacks_; }

  enum class Outcome { Optimal, Unbounded };

  // Minimizes cost over the current basis; columns with allowed[c] == false never enter.
  Outcome minimize(const RatVector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::vector<bool> basic(cols_, false);
      for (std::size_t i = 0; i < rows_; ++i)
        if (active_[i]) basic[basis_[i]] = true;
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_ && !entering; ++c) {
        if (!allowed[c] || basic[c]) continue;
        Rational reduced = cost[c];
        for (std::size_t i = 0; i < rows_; ++i)
          if (active_[i] && a_(i, c) != 0) reduced -= cost[basis_[i]] * a_(i, c);
        if (reduced < 0) entering = c;
      }
      if (!entering) return Outcome::Optimal;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i] || a_(i, c) <= 0) continue;
        const Rational ratio = rhs_[i] / a_(i, c);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return Outcome::Unbounded;
      pivot(*leaving, c);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / a_(row, col);
    for (std::size_t c = 0; c < cols_; ++c) a_(row, c) *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || !active_[i] || a_(i, col) == 0) continue;
      const Rational f = a_(i, col);
      for (std::size_t c = 0; c < cols_; ++c)
        if (a_(row, c) != 0) a_(i, c) -= f * a_(row, c);
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // After phase one: pivot zero-valued artificials out of the basis or drop redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!active_[i] || !is_artificial(basis_[i])) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < 2 * n_ + slacks_ && !col; ++c)
        if (a_(i, c) != 0) col = c;
      if (col)
        pivot(i, *col);
      else
        active_[i] = false;
    }
  }

  Rational basic_value(std::size_t col) const {
    for (std::size_t i = 0; i < rows_; ++i)
      if (active_[i] && basis_[i] == col) return rhs_[i];
    return 0;
  }

  RatVector point() const {
    RatVector x(n_);
    for (std::size_t k = 0; k < n_; ++k) x[k] = basic_value(k) - basic_value(n_ + k);
    return x;
  }

  std::size_t cols() const { return cols_; }
  std::size_t vars() const { return n_; }
  std::size_t structural() const { return 2 * n_ + slacks_; }

 private:
  std::size_t n_, slacks_, rows_, cols_;
  RatMatrix a_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  if (lp.eq_lhs.cols() != lp.num_vars || lp.le_lhs.cols() != lp.num_vars ||
      lp.eq_lhs.rows() != lp.eq_rhs.size() || lp.le_lhs.rows() != lp.le_rhs.size() ||
      (lp.objective && lp.objective->size() != lp.num_vars))
    throw ValidationError("malformed linear program");

  Tableau t(lp);
  RatVector phase1(t.cols());
  for (std::size_t c = t.structural(); c < t.cols(); ++c) phase1[c] = 1;
  std::vector<bool> all(t.cols(), true);
  t.minimize(phase1, all);
  Rational infeasibility = 0;
  for (std::size_t c = t.structural(); c < t.cols(); ++c) infeasibility += t.basic_value(c);
  LpResult result;
  if (infeasibility > 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  t.expel_artificials();
  if (!lp.objective) {
    result.status = LpStatus::Feasible;
    result.point = t.point();
    return result;
  }
  RatVector cost(t.cols());
  for (std::size_t k = 0; k < t.vars(); ++k) {
    cost[k] = -(*lp.objective)[k];
    cost[t.vars() + k] = (*lp.objective)[k];
  }
  std::vector<bool> structural(t.cols(), false);
  std::fill(structural.begin(), structural.begin() + static_cast<std::ptrdiff_t>(t.structural()), true);
  if (t.minimize(cost, structural) == Tableau::Outcome::Unbounded) {
    result.status = LpStatus::Unbounded;
    result.point = t.point();
    return result;
  }
  result.status = LpStatus::Optimal;
  result.point = t.point();
  result.value = dot(*lp.objective, result.point);
  return result;
}

bool satisfies(const LinearProgram& lp, const RatVector& x) {
  if (x.size() != lp.num_vars) return false;
  const RatVector eq = lp.eq_lhs * x;
  for (std::size_t i = 0; i < eq.size(); ++i)
    if (eq[i] != lp.eq_rhs[i]) return false;
  const RatVector le = lp.le_lhs * x;
  for (std::size_t i = 0; i < le.size(); ++i)
    if (le[i] > lp.le_rhs[i]) return false;
  return true;
}

}  // namespace goldie
