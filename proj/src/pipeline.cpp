#include "goldie/pipeline.hpp"

#include "goldie/error.hpp"

namespace goldie {

AnalysisReport analyze(const ArrangementSpec& spec, const Point& alpha) {
  const RegionClosure rc = region_closure(spec, alpha);
  AnalysisReport rep;
  rep.spec = spec;
  rep.alpha = alpha;
  rep.constraints = rc.constraints;
  rep.certificate = rc.certificate;
  rep.signs = rc.signs;
  rep.assumption3 = check_assumption3(spec, rc.signs);
  if (!rep.assumption3) {
    rep.assumption3_defect = assumption3_defect(spec, rc.signs);
    return rep;
  }
  const RationalPolytope pj = build_polytope(spec, alpha, rc.signs);
  const Box formula = witness_formula_box(spec, alpha, rc.signs, rc.certificate);
  if (!box_contains(formula, *pj.box))
    throw InconsistencyError("LP bounding box escapes the z-witness box");
  rep.box = pj.box;
  rep.dset = dset_representatives(spec, alpha, rc.signs, pj);
  rep.components = rep.dset->size();
  rep.fibers = component_fibers(rc, *rep.dset);
  return rep;
}

std::size_t goldie_rank(const ArrangementSpec& spec, const Point& alpha) {
  const ConstraintSystem cs = constraint_system(spec, alpha);
  const PartitionCertificate cert = partition_indices(spec, cs);
  const SignConfiguration sc = sign_configuration(cert, alpha, spec.n);
  if (!check_assumption3(spec, sc)) throw AssumptionViolation(assumption3_defect(spec, sc));
  return count_lattice_points(build_polytope(spec, alpha, sc)).get_ui();
}

FamilyTable goldie_family(const ArrangementSpec& spec, const Point& alpha, long x_max, bool verify) {
  const ConstraintSystem cs = constraint_system(spec, alpha);
  const PartitionCertificate cert = partition_indices(spec, cs);
  const SignConfiguration sc = sign_configuration(cert, alpha, spec.n);
  const RationalPolytope pj = build_polytope(spec, alpha, sc);

  FamilyTable table;
  table.family = build_family(spec, alpha, sc, pj);
  const bool closed = table.family.kind == FamilyKind::ClosedForm;
  for (long x = 1; x <= x_max; ++x) {
    FamilyRow row;
    row.x = x;
    row.admissible = is_admissible_dilation(spec, alpha, Rational(x));
    if (row.admissible) {
      if (closed) row.ehrhart_value = (*table.family.ehrhart)(table.family.rescaling->s(Integer(x)));
      if (verify || !closed) row.direct_count = goldie_rank(dilate(spec, Rational(x)), Rational(x) * alpha);
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace goldie
