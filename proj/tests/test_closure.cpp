#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "goldie/error.hpp"
#include "goldie/pipeline.hpp"
#include "support.hpp"

using namespace goldie;
using namespace testing_support;

using Indices = std::vector<std::size_t>;

TEST(Partition, Examples) {
  const auto sb = make_spec(2, 2, {{1, -1}}, ints({3}));
  const auto cb = partition_indices(sb, constraint_system(sb, ints({2, -1})));
  EXPECT_EQ(cb.j, (Indices{0, 1}));
  EXPECT_TRUE(cb.i_t.empty());
  EXPECT_TRUE(is_zero(cb.witness_e));

  const auto sd = make_spec(2, 2, {{1, 1}}, ints({-1}));
  const auto csd = constraint_system(sd, ints({2, -3}));
  const auto cd = partition_indices(sd, csd);
  EXPECT_TRUE(cd.j.empty());
  EXPECT_EQ(cd.i_t, (Indices{0, 1}));
  EXPECT_TRUE(certificate_valid(sd, csd, cd));
  EXPECT_TRUE(cd.witness_z.empty());

  const auto sh = make_spec(2, 2, {{1, 1}}, ints({1}));
  const auto ch = partition_indices(sh, constraint_system(sh, rats({"1/2", "1/2"})));
  EXPECT_TRUE(ch.j.empty());
  EXPECT_TRUE(ch.t.empty());
  EXPECT_TRUE(is_zero(ch.witness_e));
}

TEST(Partition, SignConfigurations) {
  const auto sb = make_spec(2, 2, {{1, -1}}, ints({3}));
  const auto rb = region_closure(sb, ints({2, -1}));
  EXPECT_EQ(rb.signs.j_plus, (Indices{0}));
  EXPECT_EQ(rb.signs.j_minus, (Indices{1}));
  EXPECT_TRUE(rb.signs.i.empty());

  const auto rd = region_closure(make_spec(2, 2, {{1, 1}}, ints({-1})), ints({2, -3}));
  EXPECT_EQ(rd.signs.i, (Indices{0, 1}));

  const auto re = region_closure(make_spec(3, 2, {{1, 1, 0}}, ints({5})), rats({"2", "3", "7/2"}));
  EXPECT_EQ(re.signs.j_plus, (Indices{0, 1}));
  EXPECT_EQ(re.signs.i, (Indices{2}));
}

TEST(Partition, DirectSumCondition) {
  const auto re = region_closure(make_spec(3, 2, {{1, 1, 0}}, ints({5})), rats({"2", "3", "7/2"}));
  EXPECT_TRUE(check_assumption3(re.spec, re.signs));

  const auto bad_spec = spec_through(3, RatMatrix::from_ints({{1, 0, 1}, {0, 1, 1}}), rats({"1", "-2", "7/2"}));
  const auto bad = region_closure(bad_spec, rats({"1", "-2", "7/2"}));
  EXPECT_EQ(bad.signs.j(), (Indices{0, 1}));
  EXPECT_EQ(bad.signs.i, (Indices{2}));
  EXPECT_FALSE(check_assumption3(bad_spec, bad.signs));
  EXPECT_NE(assumption3_defect(bad_spec, bad.signs).find("eta3 in span{eta1, eta2}"), std::string::npos);
  EXPECT_THROW(goldie_rank(bad_spec, rats({"1", "-2", "7/2"})), AssumptionViolation);

  const auto rd = region_closure(make_spec(2, 2, {{1, 1}}, ints({-1})), ints({2, -3}));
  EXPECT_TRUE(check_assumption3(rd.spec, rd.signs));
}

TEST(Closure, MembershipExamples) {
  const auto spec = make_spec(3, 2, {{1, 1, 0}}, ints({5}));
  const auto alpha = rats({"2", "3", "7/2"});
  const auto rc = region_closure(spec, alpha);
  EXPECT_TRUE(closure_membership(rc, rats({"1", "4", "99/7"})));
  EXPECT_FALSE(closure_membership(rc, ints({-1, 6, 0})));
  EXPECT_TRUE(closure_membership(rc, alpha));
}

TEST(Closure, InclusionExamples) {
  const auto spec = make_spec(3, 2, {{1, 1, 0}}, ints({5}));
  const auto ra = region_closure(spec, rats({"2", "3", "7/2"}));
  const auto rb = region_closure(spec, rats({"5/2", "5/2", "0"}));
  EXPECT_TRUE(closure_inclusion(ra, ra));
  EXPECT_TRUE(closure_inclusion(ra, rb));
  EXPECT_FALSE(closure_inclusion(rb, ra));
  const auto other = region_closure(make_spec(3, 2, {{1, 1, 0}}, ints({4})), rats({"1", "3", "0"}));
  EXPECT_THROW(closure_inclusion(ra, other), ValidationError);
}

TEST(Closure, ComponentFibers) {
  const auto rep = analyze(make_spec(3, 2, {{1, 1, 0}}, ints({5})), rats({"2", "3", "7/2"}));
  ASSERT_TRUE(rep.fibers);
  EXPECT_EQ(rep.fibers->h_basis.size(), 2u);
  ASSERT_EQ(rep.fibers->characters.size(), 6u);
  for (long k = 0; k <= 5; ++k) {
    const Point delta{Rational(k), Rational(5 - k), Rational(7, 2)};
    EXPECT_NE(std::find(rep.dset->begin(), rep.dset->end(), delta), rep.dset->end());
  }

  const auto rd = analyze(make_spec(2, 2, {{1, 1}}, ints({-1})), ints({2, -3}));
  EXPECT_TRUE(rd.fibers->h_basis.empty());
  EXPECT_EQ(*rd.dset, std::vector<Point>{ints({2, -3})});

  const auto rb = analyze(make_spec(2, 2, {{1, -1}}, ints({3})), ints({2, -1}));
  EXPECT_EQ(rb.fibers->h_basis.size(), 2u);
  EXPECT_EQ(*rb.dset, (std::vector<Point>{ints({0, -3}), ints({1, -2}), ints({2, -1})}));
}

TEST(Partition, CertificateInvariantsOnRandomInstances) {
  std::mt19937 rng(101);
  DrawStats stats;
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = random_instance(rng, stats);
    const auto cs = constraint_system(inst.spec, inst.alpha);
    const auto cert = partition_indices(inst.spec, cs);
    EXPECT_TRUE(certificate_valid(inst.spec, cs, cert));
  }
}

TEST(Partition, PermutationInvariance) {
  std::mt19937 rng(103);
  DrawStats stats;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, stats);
    const std::size_t n = inst.spec.n;
    const auto j = region_closure(inst.spec, inst.alpha).certificate.j;
    // permute the polynomial and the inverted variables among themselves
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.begin() + inst.spec.r, rng);
    std::shuffle(perm.begin() + inst.spec.r, perm.end(), rng);
    RatMatrix g(inst.spec.d(), n);
    Point alpha(n);
    for (std::size_t k = 0; k < n; ++k) {
      alpha[k] = inst.alpha[perm[k]];
      for (std::size_t i = 0; i < inst.spec.d(); ++i) g(i, k) = inst.spec.g_basis(i, perm[k]);
    }
    const auto jp = region_closure(spec_through(inst.spec.r, g, alpha), alpha).certificate.j;
    Indices mapped;
    for (auto k : jp) mapped.push_back(perm[k]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, j);
  }
}

TEST(Partition, StableUnderAdmissibleDilation) {
  std::mt19937 rng(107);
  DrawStats stats;
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, stats);
    const auto base = region_closure(inst.spec, inst.alpha);
    for (long x : {2, 3, 5}) {
      const Point ax = Rational(x) * inst.alpha;
      const auto dil = region_closure(dilate(inst.spec, x), ax);
      if (dil.certificate.t != base.certificate.t) continue;
      EXPECT_EQ(dil.certificate.j, base.certificate.j);
      EXPECT_EQ(dil.certificate.i_t, base.certificate.i_t);
      EXPECT_EQ(dil.signs, base.signs);
      EXPECT_TRUE(check_assumption3(dil.spec, dil.signs));
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Closure, SupportLiesInClosure) {
  std::mt19937 rng(109);
  DrawStats stats;
  std::uniform_int_distribution<int> step(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, stats);
    const auto rc = region_closure(inst.spec, inst.alpha);
    const auto ker = integer_kernel_basis(inst.spec.g_basis);
    for (int probe = 0; probe < 20; ++probe) {
      Point beta = inst.alpha;
      for (const auto& v : ker) {
        const int c = step(rng);
        for (std::size_t i = 0; i < beta.size(); ++i) beta[i] += c * Rational(v[i]);
      }
      if (support_membership(inst.spec, inst.alpha, beta)) {
        EXPECT_TRUE(closure_membership(rc, beta));
      }
    }
  }
}

TEST(Closure, InclusionIsAPreorderAndPointwise) {
  std::mt19937 rng(113);
  std::uniform_int_distribution<int> step(-2, 2);
  DrawStats stats;
  int positive = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng, stats, 4);
    // pool of points on the same fiber: alpha shifted along rational kernel vectors
    const auto ker = kernel_basis(inst.spec.g_basis);
    std::vector<RegionClosure> pool{region_closure(inst.spec, inst.alpha)};
    for (int k = 0; k < 5; ++k) {
      Point beta = inst.alpha;
      for (const auto& v : ker) beta = beta + frac(step(rng), 1 + std::abs(step(rng))) * v;
      pool.push_back(region_closure(inst.spec, beta));
    }
    for (const auto& a : pool) {
      EXPECT_TRUE(closure_inclusion(a, a));
      for (const auto& b : pool) {
        if (!closure_inclusion(a, b)) continue;
        ++positive;
        if (check_assumption3(a.spec, a.signs)) {
          const auto rep = analyze(a.spec, a.alpha);
          for (const auto& delta : *rep.dset) EXPECT_TRUE(closure_membership(b, delta));
        }
        for (const auto& c : pool)
          if (closure_inclusion(b, c)) {
            EXPECT_TRUE(closure_inclusion(a, c));
          }
      }
    }
  }
  EXPECT_GT(positive, 240);
}
