#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goldie/matrix.hpp"

namespace goldie {

/// A point of t* = Q^n.
using Point = RatVector;

/// Subtorus data: g is spanned by the rows of `g_basis` (d x n, rank d), so column i is
/// eta_i = pi_i^* restricted to g, and chi lives in g^* in the coordinates of that basis.
/// Variables 0..r-1 are polynomial, r..n-1 are inverted.
struct ArrangementSpec {
  std::size_t n = 0;
  std::size_t r = 0;
  RatMatrix g_basis;
  RatVector chi;

  std::size_t d() const { return g_basis.rows(); }
  RatVector eta(std::size_t i) const { return g_basis.col(i); }
};

/// Unvalidated instance as read from a file: every number is an exact rational literal.
struct RawInstance {
  std::optional<long> n;
  std::optional<long> r;
  std::vector<std::vector<std::string>> g_basis;
  std::optional<std::vector<std::string>> chi;
  std::optional<std::vector<std::string>> alpha;
};

struct Instance {
  ArrangementSpec spec;
  std::optional<Point> alpha;
};

/// Checks dimensions and rank, parses literals, derives chi = G alpha when chi is absent.
Instance validate_spec(const RawInstance& raw);

/// G beta == chi.
bool fiber_membership(const ArrangementSpec& spec, const Point& beta);

/// One inequality lambda_i(u) <= q_i of the translated cone, lambda_i(u) = sign * u_i.
struct IndexConstraint {
  std::size_t index;
  int sign;
  Integer bound;
};

/// The interesting indices T (polynomial variables with integral alpha_i) and their constraints.
struct ConstraintSystem {
  std::vector<IndexConstraint> constraints;

  std::vector<std::size_t> indices() const;
  std::size_t size() const { return constraints.size(); }
};

/// Throws ValidationError when alpha is not on the fiber.
ConstraintSystem constraint_system(const ArrangementSpec& spec, const Point& alpha);

/// beta - alpha integral, beta on the fiber, and beta_i in Z_{>=0} iff alpha_i in Z_{>=0} for i < r.
bool support_membership(const ArrangementSpec& spec, const Point& alpha, const Point& beta);

/// Rewrites (G, chi) in another basis of g: G' = M G, chi' = M chi. M must be invertible.
ArrangementSpec change_basis(const ArrangementSpec& spec, const RatMatrix& m);

/// The same subtorus with chi scaled by x (the character of the dilated point x alpha).
ArrangementSpec dilate(const ArrangementSpec& spec, const Rational& x);

bool is_nonnegative_integer(const Rational& q);

}  // namespace goldie
