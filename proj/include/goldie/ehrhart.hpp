#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goldie/polytope.hpp"
#include "goldie/quasi_polynomial.hpp"

namespace goldie {

/// Center of dilation in Q^J: 0 on J+, -1 on J-, in the sorted order of J.
RatVector apex(const SignConfiguration& sc);

/// a0 with sum_j apex_j eta_j = a0 * chi_J. Returns 0 when both sides vanish;
/// throws NoDilationAxis when no such scalar exists.
Rational compute_a0(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc, const RatVector& apex);

/// a0 = a_z / a_n in lowest terms with a_n > 0; the dilation factor is
/// f(x) = (x - a0)/(1 - a0) = s(x) / (a_n - a_z) with s(x) = a_n x - a_z.
struct Rescaling {
  Integer a_n;
  Integer a_z;

  Integer scale() const { return a_n - a_z; }
  Integer s(const Integer& x) const { return a_n * x - a_z; }
  Rational f(const Rational& x) const { return (Rational(a_n) * x - Rational(a_z)) / Rational(scale()); }
};

/// Throws ValidationError for a0 == 1 and InconsistencyError for a0 > 1.
Rescaling integral_rescaling(const Rational& a0);

/// #(q * base intersected with Z^k).
std::size_t count_dilation(const RationalPolytope& base, const Rational& q);

/// Exact fit of t -> #(tQ cap Z^k) on positive dilations t, one Vandermonde solve per residue
/// class with two held-out validation samples each. The period starts at the lcm of the
/// vertex denominators and is doubled once on validation failure.
QuasiPolynomial fit_quasipolynomial(const RationalPolytope& q);

/// T and the sign classes of x alpha agree with those of alpha.
bool is_admissible_dilation(const ArrangementSpec& spec, const Point& alpha, const Rational& x);

/// Denominators of the non-integral polynomial coordinates of alpha.
std::vector<Integer> admissible_denominators(const ArrangementSpec& spec, const Point& alpha);

enum class FamilyKind {
  ClosedForm,
  /// No rational a0 exists; only tabulated direct counts.
  NoDilationAxis,
  /// alpha_J equals the apex, so P_J is a single point and f is undefined.
  Degenerate,
};

struct GoldieFamily {
  Point alpha;
  SignConfiguration signs;
  RatVector apex;
  FamilyKind kind = FamilyKind::ClosedForm;
  std::optional<Rational> a0;
  std::optional<Rescaling> rescaling;
  /// Q = (P_J - apex) / (a_n - a_z).
  std::optional<RationalPolytope> reference;
  std::optional<std::vector<RatVector>> reference_vertices;
  std::optional<long> reference_dimension;
  /// Ehrhart quasi-polynomial of Q in the integral dilation t.
  std::optional<QuasiPolynomial> ehrhart;
  /// Goldie rank as a quasi-polynomial in x (ehrhart composed with s).
  std::optional<QuasiPolynomial> rank;
  std::vector<Integer> denominators;
  std::string note;
};

/// Builds the family of alpha from its polytope P_J. Never fabricates a closed form:
/// NoDilationAxis and the single-point case are reported through `kind`.
GoldieFamily build_family(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                          const RationalPolytope& pj);

}  // namespace goldie
