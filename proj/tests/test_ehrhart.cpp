#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "goldie/error.hpp"
#include "goldie/instance_io.hpp"
#include "goldie/oracle.hpp"
#include "goldie/pipeline.hpp"
#include "support.hpp"

using namespace goldie;
using namespace testing_support;

namespace {

struct Case {
  ArrangementSpec spec;
  Point alpha;
};

std::vector<Case> fixture_cases() {
  std::vector<Case> out;
  for (const char* name : {"instA", "instB", "instC", "instD", "instE", "r0", "degenerate"}) {
    const auto inst = load_instance(std::string(GOLDIE_FIXTURE_DIR) + "/" + name + ".json");
    out.push_back({inst.spec, *inst.alpha});
  }
  return out;
}

std::vector<RatVector> sorted_vertices(const RationalPolytope& p) {
  auto v = vertex_enumeration(p);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(QuasiPolynomial, EvaluateComposeMinimize) {
  const QuasiPolynomial qp(2, {ints({1, 1}), {Rational(1, 2), Rational(1, 2)}});
  EXPECT_EQ(qp(4), 5);
  EXPECT_EQ(qp(3), 2);
  EXPECT_EQ(qp(-3), -1);
  const QuasiPolynomial c(2, {{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  // floor(t/2) + 1
  for (long t = 0; t < 12; ++t) EXPECT_EQ(c(t), t / 2 + 1);
  const auto r = c.compose_linear(3, -1);
  for (long x = 1; x < 12; ++x) EXPECT_EQ(r(x), c(3 * x - 1));
  const QuasiPolynomial same(3, {ints({1, 5}), ints({1, 5}), ints({1, 5})});
  EXPECT_EQ(same.minimize_period().period(), 1u);
  EXPECT_EQ(QuasiPolynomial::parse(c.serialize()).serialize(), c.serialize());
  EXPECT_EQ(QuasiPolynomial(1, {ints({1, 5, 0})}).degree(), 1);
}

TEST(Family, ApexAndA0) {
  const auto sa = make_spec(2, 2, {{1, 1}}, ints({5}));
  const auto ra = region_closure(sa, ints({2, 3}));
  EXPECT_EQ(apex(ra.signs), ints({0, 0}));
  EXPECT_EQ(compute_a0(sa, ints({2, 3}), ra.signs, apex(ra.signs)), 0);

  const auto sb = make_spec(2, 2, {{1, -1}}, ints({3}));
  const auto rb = region_closure(sb, ints({2, -1}));
  EXPECT_EQ(apex(rb.signs), ints({0, -1}));
  EXPECT_EQ(compute_a0(sb, ints({2, -1}), rb.signs, apex(rb.signs)), Rational(1, 3));

  const auto sc = make_spec(2, 2, {{2, -1}}, ints({3}));
  const auto rc = region_closure(sc, ints({1, -1}));
  EXPECT_EQ(compute_a0(sc, ints({1, -1}), rc.signs, apex(rc.signs)), Rational(1, 3));

  EXPECT_TRUE(apex(SignConfiguration{}).empty());
}

TEST(Family, Rescaling) {
  const auto zero = integral_rescaling(0);
  EXPECT_EQ(zero.a_n, 1);
  EXPECT_EQ(zero.a_z, 0);
  EXPECT_EQ(zero.scale(), 1);
  const auto third = integral_rescaling(Rational(1, 3));
  EXPECT_EQ(third.a_n, 3);
  EXPECT_EQ(third.a_z, 1);
  EXPECT_EQ(third.scale(), 2);
  EXPECT_EQ(third.f(2), Rational(5, 2));
  const auto neg = integral_rescaling(Rational(-1, 2));
  EXPECT_EQ(neg.a_n, 2);
  EXPECT_EQ(neg.a_z, -1);
  EXPECT_EQ(neg.s(1), 3);
  EXPECT_EQ(neg.scale(), 3);
  EXPECT_THROW(integral_rescaling(1), ValidationError);
  EXPECT_THROW(integral_rescaling(2), InconsistencyError);
}

TEST(Family, CountDilationExamples) {
  const auto sb = make_spec(2, 2, {{1, -1}}, ints({3}));
  const auto rb = region_closure(sb, ints({2, -1}));
  const auto base = translate(build_polytope(sb, ints({2, -1}), rb.signs), apex(rb.signs));
  EXPECT_EQ(count_dilation(base, Rational(5, 2)), 6u);
  EXPECT_EQ(count_dilation(base, Rational(1, 3)), 0u);

  RationalPolytope seg;
  seg.dim = 2;
  seg.eq_lhs = RatMatrix::from_ints({{1, -1}});
  seg.eq_rhs = ints({0});
  seg.le_lhs = RatMatrix::from_ints({{1, 0}, {-1, 0}});
  seg.le_rhs = ints({1, 0});
  EXPECT_EQ(count_dilation(seg, 3), 4u);
}

TEST(Family, FitExamples) {
  const auto sa = make_spec(2, 2, {{1, 1}}, ints({5}));
  const auto pa = build_polytope(sa, ints({2, 3}), region_closure(sa, ints({2, 3})).signs);
  const auto ea = fit_quasipolynomial(pa);
  EXPECT_EQ(ea.period(), 1u);
  EXPECT_EQ(ea.coefficients()[0], ints({1, 5}));

  const auto sc = make_spec(2, 2, {{2, -1}}, ints({3}));
  const auto signs = region_closure(sc, ints({1, -1})).signs;
  const auto fc = build_family(sc, ints({1, -1}), signs, build_polytope(sc, ints({1, -1}), signs));
  ASSERT_EQ(fc.kind, FamilyKind::ClosedForm);
  EXPECT_EQ(sorted_vertices(*fc.reference), (std::vector<RatVector>{ints({0, -1}), rats({"1/2", "0"})}));
  EXPECT_EQ(fc.ehrhart->period(), 2u);
  const long expected[] = {1, 2, 2, 3, 3, 4};
  for (long t = 1; t <= 6; ++t) EXPECT_EQ((*fc.ehrhart)(t), expected[t - 1]);

  RationalPolytope point;
  point.dim = 2;
  point.eq_lhs = RatMatrix::identity(2);
  point.eq_rhs = ints({2, -1});
  point.le_lhs = RatMatrix(0, 2);
  const auto ep = fit_quasipolynomial(point);
  EXPECT_EQ(ep.period(), 1u);
  EXPECT_EQ(ep.coefficients()[0], ints({1}));
}

TEST(Family, ThreeDimensionalPeriodFourAgreesWithOracle) {
  const auto spec = spec_through(5, RatMatrix::from_ints({{-2, -2, 1, -1, -2}, {2, 0, 2, 2, -2}}), ints({2, 3, 1, 0, 2}));
  const Point alpha = ints({2, 3, 1, 0, 2});
  const auto rc = region_closure(spec, alpha);
  const auto fam = build_family(spec, alpha, rc.signs, build_polytope(spec, alpha, rc.signs));
  ASSERT_EQ(fam.kind, FamilyKind::ClosedForm);
  EXPECT_EQ(fam.reference_dimension, 3);
  EXPECT_EQ(fam.ehrhart->period(), 4u);
  for (long x = 1; x <= 2; ++x) {
    const Point ax = Rational(x) * alpha;
    const auto oracle = oracle_component_count(dilate(spec, x), ax, default_radius_schedule(spec));
    ASSERT_TRUE(oracle.stabilized);
    EXPECT_EQ((*fam.rank)(x), Rational(static_cast<unsigned long>(oracle.component_count)));
  }
}

TEST(Family, Admissibility) {
  const auto sa = make_spec(2, 2, {{1, 1}}, ints({5}));
  EXPECT_TRUE(is_admissible_dilation(sa, ints({2, 3}), 7));
  const auto sh = make_spec(2, 2, {{1, 1}}, ints({1}));
  EXPECT_TRUE(is_admissible_dilation(sh, rats({"1/2", "1/2"}), 3));
  EXPECT_FALSE(is_admissible_dilation(sh, rats({"1/2", "1/2"}), 2));
}

TEST(Family, RescalingIdentitiesOnFixturesAndRandomInstances) {
  auto cases = fixture_cases();
  std::mt19937 rng(307);
  DrawStats stats;
  // keep draws with nonempty J; the others have no polytope to dilate
  while (cases.size() < 130) {
    const auto inst = random_instance(rng, stats, 4);
    if (!region_closure(inst.spec, inst.alpha).signs.j().empty()) cases.push_back({inst.spec, inst.alpha});
  }
  int closed = 0;
  for (const auto& c : cases) {
    const auto rc = region_closure(c.spec, c.alpha);
    const auto pj = build_polytope(c.spec, c.alpha, rc.signs);
    const auto fam = build_family(c.spec, c.alpha, rc.signs, pj);
    if (fam.kind != FamilyKind::ClosedForm) continue;
    ++closed;
    const auto base = translate(pj, fam.apex);
    const auto& resc = *fam.rescaling;
    EXPECT_EQ(resc.f(1), 1);
    EXPECT_EQ(count_dilation(base, resc.f(1)), enumerate_lattice_points(pj).size());

    EXPECT_LE(fam.ehrhart->degree(), *fam.reference_dimension);
    Integer lcm = 1;
    for (const auto& v : *fam.reference_vertices) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), lcm_of_denominators(v).get_mpz_t());
    EXPECT_EQ(lcm % Integer(static_cast<unsigned long>(fam.ehrhart->period())), 0);

    for (long x = 1; x <= 12; ++x) {
      if (!is_admissible_dilation(c.spec, c.alpha, x)) continue;
      const Rational fx = resc.f(x);
      EXPECT_EQ(sorted_vertices(scale(base, fx)), sorted_vertices(scale(*fam.reference, Rational(resc.s(x)))));
      EXPECT_EQ((*fam.ehrhart)(resc.s(x)), Rational(count_dilation(base, fx)));
      EXPECT_EQ((*fam.rank)(x), Rational(count_dilation(base, fx)));
    }
  }
  EXPECT_GT(closed, 60);
}

TEST(Family, DilationKeepsDirectSum) {
  std::mt19937 rng(311);
  DrawStats stats;
  for (int k = 0; k < 100; ++k) {
    const auto inst = random_instance(rng, stats);
    for (long x = 2; x <= 6; ++x) {
      if (!is_admissible_dilation(inst.spec, inst.alpha, x)) continue;
      const auto rc = region_closure(dilate(inst.spec, x), Rational(x) * inst.alpha);
      EXPECT_TRUE(check_assumption3(rc.spec, rc.signs));
    }
  }
}

TEST(Family, TablesMatchDirectCounts) {
  const auto sc = make_spec(2, 2, {{2, -1}}, ints({3}));
  const auto table = goldie_family(sc, ints({1, -1}), 6, true);
  const long expected[] = {2, 3, 5, 6, 8, 9};
  ASSERT_EQ(table.rows.size(), 6u);
  for (const auto& row : table.rows) {
    EXPECT_TRUE(row.admissible);
    EXPECT_EQ(*row.ehrhart_value, expected[row.x - 1]);
    EXPECT_EQ(*row.direct_count, static_cast<std::size_t>(expected[row.x - 1]));
  }

  const auto sh = make_spec(2, 2, {{1, 1}}, ints({1}));
  const auto half = goldie_family(sh, rats({"1/2", "1/2"}), 4, true);
  EXPECT_FALSE(half.rows[1].admissible);
  EXPECT_FALSE(half.rows[1].ehrhart_value);
  EXPECT_FALSE(half.rows[1].direct_count);
  EXPECT_TRUE(half.rows[2].admissible);
}

TEST(Family, DegenerateApexIsTabulated) {
  const auto spec = make_spec(2, 2, {{1, 1}}, ints({-2}));
  const auto table = goldie_family(spec, ints({-1, -1}), 5, false);
  EXPECT_EQ(table.family.kind, FamilyKind::Degenerate);
  EXPECT_FALSE(table.family.rank);
  for (const auto& row : table.rows) {
    EXPECT_FALSE(row.ehrhart_value);
    ASSERT_TRUE(row.direct_count);
    EXPECT_EQ(*row.direct_count, static_cast<std::size_t>(2 * row.x - 1));
  }
}
