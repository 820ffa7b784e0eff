#include "goldie/ehrhart.hpp"

#include <algorithm>

#include "goldie/error.hpp"

namespace goldie {

RatVector apex(const SignConfiguration& sc) {
  RatVector z;
  for (std::size_t j : sc.j())
    z.emplace_back(std::find(sc.j_minus.begin(), sc.j_minus.end(), j) != sc.j_minus.end() ? -1 : 0);
  return z;
}

Rational compute_a0(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                    const RatVector& apex_point) {
  const auto j = sc.j();
  if (apex_point.size() != j.size()) throw ValidationError("apex has wrong dimension");
  RatVector lhs(spec.d()), chi_j(spec.d());
  for (std::size_t k = 0; k < j.size(); ++k) {
    lhs = lhs + apex_point[k] * spec.eta(j[k]);
    chi_j = chi_j + alpha[j[k]] * spec.eta(j[k]);
  }
  if (is_zero(chi_j)) {
    if (is_zero(lhs)) return 0;
    throw NoDilationAxis("chi_J = 0 but sum apex_j eta_j = " + to_string(lhs) + " is not");
  }
  std::size_t pivot = 0;
  while (chi_j[pivot] == 0) ++pivot;
  const Rational a0 = lhs[pivot] / chi_j[pivot];
  if (lhs != a0 * chi_j)
    throw NoDilationAxis("sum apex_j eta_j = " + to_string(lhs) + " is not a rational multiple of chi_J = " +
                         to_string(chi_j));
  return a0;
}

Rescaling integral_rescaling(const Rational& a0) {
  if (a0 == 1) throw ValidationError("a0 = 1: the dilation factor is undefined");
  if (a0 > 1) throw InconsistencyError("a0 = " + to_string(a0) + " > 1 contradicts boundedness of P_J");
  return Rescaling{a0.get_den(), a0.get_num()};
}

std::size_t count_dilation(const RationalPolytope& base, const Rational& q) {
  return count_lattice_points(scale(base, q)).get_ui();
}

namespace {

std::optional<QuasiPolynomial> try_fit(const RationalPolytope& q, std::size_t period, std::size_t degree) {
  std::vector<RatVector> rows;
  for (std::size_t rho = 0; rho < period; ++rho) {
    std::vector<Integer> ts;
    for (Integer t = rho == 0 ? Integer(static_cast<unsigned long>(period)) : Integer(static_cast<unsigned long>(rho));
         ts.size() < degree + 3; t += static_cast<unsigned long>(period))
      ts.push_back(t);
    RatMatrix vander(degree + 1, degree + 1);
    RatVector counts(degree + 1);
    for (std::size_t s = 0; s <= degree; ++s) {
      Rational power = 1;
      for (std::size_t k = 0; k <= degree; ++k) {
        vander(s, k) = power;
        power *= Rational(ts[s]);
      }
      counts[s] = static_cast<unsigned long>(count_dilation(q, Rational(ts[s])));
    }
    const auto coeffs = solve_linear(vander, counts);
    if (!coeffs) throw InconsistencyError("singular Vandermonde system");
    for (std::size_t s = degree + 1; s < ts.size(); ++s) {
      Rational value = 0;
      for (std::size_t k = degree + 1; k-- > 0;) value = value * Rational(ts[s]) + (*coeffs)[k];
      if (value != Rational(static_cast<unsigned long>(count_dilation(q, Rational(ts[s]))))) return std::nullopt;
    }
    rows.push_back(*coeffs);
  }
  return QuasiPolynomial(period, std::move(rows));
}

}  // namespace

QuasiPolynomial fit_quasipolynomial(const RationalPolytope& q) {
  const auto vertices = vertex_enumeration(q);
  if (vertices.empty()) throw ValidationError("cannot fit the Ehrhart function of an empty polytope");
  Integer lcm = 1;
  for (const auto& v : vertices) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), lcm_of_denominators(v).get_mpz_t());
  const auto period = static_cast<std::size_t>(lcm.get_ui());
  const auto degree = static_cast<std::size_t>(affine_hull_dimension(q));
  if (auto fit = try_fit(q, period, degree)) return fit->minimize_period();
  if (auto fit = try_fit(q, 2 * period, degree)) return fit->minimize_period();
  throw InconsistencyError("quasi-polynomial validation failed at periods " + std::to_string(period) + " and " +
                           std::to_string(2 * period));
}

bool is_admissible_dilation(const ArrangementSpec& spec, const Point& alpha, const Rational& x) {
  if (x <= 0) throw ValidationError("dilation factor must be positive");
  const ConstraintSystem base = constraint_system(spec, alpha);
  const ConstraintSystem dilated = constraint_system(dilate(spec, x), x * alpha);
  if (base.size() != dilated.size()) return false;
  for (std::size_t k = 0; k < base.size(); ++k)
    if (base.constraints[k].index != dilated.constraints[k].index ||
        base.constraints[k].sign != dilated.constraints[k].sign)
      return false;
  return true;
}

std::vector<Integer> admissible_denominators(const ArrangementSpec& spec, const Point& alpha) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < spec.r; ++i)
    if (!is_integer(alpha[i])) out.push_back(alpha[i].get_den());
  return out;
}

GoldieFamily build_family(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                          const RationalPolytope& pj) {
  GoldieFamily fam;
  fam.alpha = alpha;
  fam.signs = sc;
  fam.apex = apex(sc);
  fam.denominators = admissible_denominators(spec, alpha);

  RatVector alpha_j;
  for (std::size_t j : sc.j()) alpha_j.push_back(alpha[j]);
  if (alpha_j == fam.apex) {
    fam.kind = FamilyKind::Degenerate;
    fam.note = "alpha_J equals the apex: P_J is a single point and the dilation factor is undefined";
    return fam;
  }
  try {
    fam.a0 = compute_a0(spec, alpha, sc, fam.apex);
  } catch (const NoDilationAxis& e) {
    fam.kind = FamilyKind::NoDilationAxis;
    fam.note = e.what();
    return fam;
  }
  fam.rescaling = integral_rescaling(*fam.a0);
  const RationalPolytope shifted = translate(pj, fam.apex);
  fam.reference = scale(shifted, Rational(1) / Rational(fam.rescaling->scale()));
  fam.reference_vertices = vertex_enumeration(*fam.reference);
  fam.reference_dimension = affine_hull_dimension(*fam.reference);
  fam.ehrhart = fit_quasipolynomial(*fam.reference);
  fam.rank = fam.ehrhart->compose_linear(fam.rescaling->a_n, -fam.rescaling->a_z);
  return fam;
}

}  // namespace goldie
