#include "goldie/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "goldie/error.hpp"
#include "goldie/lattice.hpp"

namespace goldie {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw InconsistencyError("oracle: lattice basis entry exceeds 64 bits");
  return z.get_si();
}

// Support of alpha in lattice coordinates: point = alpha + B c, and for each interesting
// index the value alpha_i + (B c)_i must stay >= 0 (alpha_i >= 0) or <= -1 (alpha_i < 0).
class Support {
 public:
  Support(const ArrangementSpec& spec, const Point& alpha) {
    IntMatrix basis = integer_kernel_basis(spec.g_basis);
    size_reduce(basis);
    for (const auto& b : basis) {
      Vec v;
      for (const auto& x : b) v.push_back(to_i64(x));
      basis_.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < spec.r; ++i) {
      if (!is_integer(alpha[i])) continue;
      Row row;
      for (const auto& b : basis_) row.coef.push_back(b[i]);
      const std::int64_t a = to_i64(alpha[i].get_num());
      row.offset = a;
      row.nonneg = a >= 0;
      rows_.push_back(std::move(row));
    }
  }

  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& c) const {
    for (const auto& row : rows_) {
      std::int64_t v = row.offset;
      for (std::size_t k = 0; k < c.size(); ++k) v += row.coef[k] * c[k];
      if (row.nonneg ? v < 0 : v > -1) return false;
    }
    return true;
  }

  // p + k d stays in the support for every k >= 0 (from any support point p): each
  // sign-constrained coordinate moves only away from its forbidden side along d.
  bool recedes(const Vec& d) const {
    for (const auto& row : rows_) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < d.size(); ++k) v += row.coef[k] * d[k];
      if (row.nonneg ? v < 0 : v > 0) return false;
    }
    return true;
  }

 private:
  struct Row {
    Vec coef;
    std::int64_t offset = 0;
    bool nonneg = true;
  };
  std::vector<Vec> basis_;
  std::vector<Row> rows_;
};

std::vector<Vec> support_points(const Support& s, long radius) {
  std::vector<Vec> out;
  const std::size_t k = s.rank();
  Vec c(k, -radius);
  for (;;) {
    if (s.contains(c)) out.push_back(c);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (c[i] < radius) {
        ++c[i];
        break;
      }
      c[i] = -radius;
    }
    if (i == k) break;
  }
  return out;
}

std::vector<Vec> candidate_directions(std::size_t k) {
  std::vector<Vec> out;
  if (k == 0) return out;
  Vec c(k, -3);
  for (;;) {
    std::int64_t g = 0;
    for (auto x : c) g = std::gcd(g, x);
    if (g == 1) out.push_back(c);
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (c[i] < 3) {
        ++c[i];
        break;
      }
      c[i] = -3;
    }
    if (i == k) break;
  }
  // shortest first; among equal norms, positive leading entry first
  auto key = [](const Vec& v) {
    std::int64_t m = 0;
    for (auto x : v) m = std::max(m, std::abs(x));
    const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    return std::pair{m, lead != v.end() && *lead < 0};
  };
  std::stable_sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return key(a) < key(b); });
  return out;
}

RatVector to_rat(const Vec& v) {
  RatVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

// Integer functionals whose common kernel is the span of `dirs` (in lattice coordinates).
std::vector<Vec> quotient_functionals(const std::vector<Vec>& dirs, std::size_t k) {
  std::vector<RatVector> rows;
  for (const auto& d : dirs) rows.push_back(to_rat(d));
  const auto funcs = kernel_basis(RatMatrix::from_rows(rows, k));
  std::vector<Vec> out;
  for (const auto& f : funcs) {
    const Integer l = lcm_of_denominators(f);
    Vec v;
    for (const auto& x : f) v.push_back(to_i64(Rational(x * Rational(l)).get_num()));
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t count_classes(const std::vector<Vec>& pts, const std::vector<Vec>& funcs) {
  std::set<Vec> keys;
  for (const auto& p : pts) {
    Vec key;
    for (const auto& f : funcs) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s += f[i] * p[i];
      key.push_back(s);
    }
    keys.insert(std::move(key));
  }
  return keys.size();
}

}  // namespace

std::vector<long> default_radius_schedule(const ArrangementSpec& spec) {
  const std::size_t k = spec.n - spec.d();
  // grow by half each step while the box holds at most ~2 million coefficient vectors
  constexpr double kBudget = 2e6;
  long radius = k <= 2 ? 10 : k == 3 ? 6 : 4;
  std::vector<long> out;
  do {
    out.push_back(radius);
    radius += radius / 2;
  } while (std::pow(2.0 * radius + 1, static_cast<double>(k)) <= kBudget && out.size() < 12);
  if (out.size() < 2) out.push_back(radius);
  return out;
}

OracleResult oracle_component_count(const ArrangementSpec& spec, const Point& alpha, const std::vector<long>& radii) {
  if (!fiber_membership(spec, alpha)) throw ValidationError("alpha is not on the fiber");
  if (radii.size() < 2) throw ValidationError("oracle needs at least two radii");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (radii[i] < 1 || radii[i + 1] <= radii[i]) throw ValidationError("oracle radii must increase");

  const Support support(spec, alpha);
  const std::size_t k = support.rank();
  OracleResult res;

  // unbounded directions do not depend on the radius
  std::vector<Vec> dirs;
  std::vector<RatVector> span;
  for (const auto& d : candidate_directions(k)) {
    RatVector dr = to_rat(d);
    auto with = span;
    with.push_back(dr);
    if (rank_of(with, k) == span.size() || !support.recedes(d)) continue;
    dirs.push_back(d);
    span.push_back(std::move(dr));
  }
  for (const auto& d : dirs) {
    Vec full(spec.n, 0);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t i = 0; i < spec.n; ++i) full[i] += d[l] * support.basis()[l][i];
    res.directions.push_back(std::move(full));
  }
  res.span_dimension = span.size();
  const auto funcs = quotient_functionals(dirs, k);

  std::size_t previous = count_classes(support_points(support, radii[0]), funcs);
  for (std::size_t step = 0; step + 1 < radii.size(); ++step) {
    const std::size_t current = count_classes(support_points(support, radii[step + 1]), funcs);
    res.radius_low = radii[step];
    res.radius_high = radii[step + 1];
    res.component_count = current;
    if (previous == current && current > 0) {
      res.stabilized = true;
      return res;
    }
    previous = current;
  }
  return res;
}

}  // namespace goldie
