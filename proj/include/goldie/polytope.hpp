#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "goldie/closure.hpp"

namespace goldie {

struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval&) const = default;
};

using Box = std::vector<Interval>;

/// {v in Q^k : A v = b, C v <= c}. `coords` names the ambient coordinates (indices into
/// 1..n of the arrangement) when the polytope comes from a sign configuration.
struct RationalPolytope {
  std::size_t dim = 0;
  std::vector<std::size_t> coords;
  RatMatrix eq_lhs;
  RatVector eq_rhs;
  RatMatrix le_lhs;
  RatVector le_rhs;
  /// Filled by build_polytope once boundedness has been certified.
  std::optional<Box> box;

  bool contains(const RatVector& v) const;
};

/// P_J = {v in Q^J : sum v_j eta_j = chi_J, v_j >= 0 on J+, v_j <= -1 on J-}.
/// Refuses (AssumptionViolation) when the direct-sum condition fails; an unbounded
/// coordinate raises InconsistencyError.
RationalPolytope build_polytope(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc);

/// Tight box from 2k exact LPs. nullopt for an empty polytope; InconsistencyError if unbounded.
std::optional<Box> bounding_box(const RationalPolytope& p);

/// Box for P_J read off the positive z-witness: sum z_j Lambda_j is constant on V_J,
/// so every Lambda_j is bounded below by the others' upper bounds.
Box witness_formula_box(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                        const PartitionCertificate& cert);

bool box_contains(const Box& outer, const Box& inner);

/// All integer points, lexicographically sorted. Walks the integer solutions of the
/// equalities level by level with Fourier-Motzkin bounds.
std::vector<IntVector> enumerate_lattice_points(const RationalPolytope& p);

/// Number of integer points; whole runs along the last lattice direction are added at once.
Integer count_lattice_points(const RationalPolytope& p);

/// Basic feasible points, deduplicated and sorted.
std::vector<RatVector> vertex_enumeration(const RationalPolytope& p);

/// Dimension of the affine hull (of the vertex set); -1 for the empty polytope.
long affine_hull_dimension(const RationalPolytope& p);

/// Row indices of the inequalities tight at v.
std::vector<std::size_t> active_inequalities(const RationalPolytope& p, const RatVector& v);

/// q * P: every right-hand side multiplied by q.
RationalPolytope scale(const RationalPolytope& p, const Rational& q);
/// P - t.
RationalPolytope translate(const RationalPolytope& p, const RatVector& t);

/// Lifts each lattice point of P_J to Q^n: delta_j = v_j on J, delta_i = alpha_i on I.
std::vector<Point> dset_representatives(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                                        const RationalPolytope& p);

}  // namespace goldie
