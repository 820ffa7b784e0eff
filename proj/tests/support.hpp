#pragma once

#include <random>
#include <string>
#include <vector>

#include "goldie/arrangement.hpp"
#include "goldie/closure.hpp"
#include "goldie/matrix.hpp"
#include "goldie/rational.hpp"

namespace testing_support {

using namespace goldie;

/// a / b in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline RatVector rats(std::initializer_list<const char*> items) {
  RatVector v;
  for (const char* s : items) v.push_back(parse_rational(s));
  return v;
}

inline RatVector ints(std::initializer_list<long> items) {
  RatVector v;
  for (long k : items) v.emplace_back(k);
  return v;
}

inline ArrangementSpec make_spec(std::size_t n, std::size_t r, std::initializer_list<std::initializer_list<long>> g,
                                 const RatVector& chi) {
  ArrangementSpec spec;
  spec.n = n;
  spec.r = r;
  spec.g_basis = RatMatrix::from_ints(g);
  spec.chi = chi;
  return spec;
}

/// Spec whose character is G alpha.
inline ArrangementSpec spec_through(std::size_t r, const RatMatrix& g, const Point& alpha) {
  ArrangementSpec spec;
  spec.n = g.cols();
  spec.r = r;
  spec.g_basis = g;
  spec.chi = g * alpha;
  return spec;
}

struct RandomInstance {
  ArrangementSpec spec;
  Point alpha;
};

struct DrawStats {
  std::size_t draws = 0;
  std::size_t rank_deficient = 0;
  std::size_t direct_sum_rejected = 0;
};

/// n <= 5, d <= 2, entries in [-2, 2], alpha with denominators in {1, 2, 3} (integral half the time).
/// Draws failing full rank or the direct-sum condition are rejected and counted.
inline RandomInstance random_instance(std::mt19937& rng, DrawStats& stats, std::size_t max_n = 5) {
  std::uniform_int_distribution<int> entry(-2, 2), numer(-4, 4), den(2, 3), coin(0, 1);
  for (;;) {
    ++stats.draws;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, n))(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    RatMatrix g(d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = entry(rng);
    if (rank(g) != d) {
      ++stats.rank_deficient;
      continue;
    }
    Point alpha(n);
    for (auto& a : alpha) a = coin(rng) ? Rational(numer(rng)) : frac(numer(rng), den(rng));
    RandomInstance inst{spec_through(r, g, alpha), alpha};
    const auto rc = region_closure(inst.spec, inst.alpha);
    if (!check_assumption3(inst.spec, rc.signs)) {
      ++stats.direct_sum_rejected;
      continue;
    }
    return inst;
  }
}

}  // namespace testing_support
