#include "goldie/polytope.hpp"

#include <algorithm>

#include "goldie/error.hpp"
#include "goldie/lattice.hpp"
#include "goldie/linear_program.hpp"

namespace goldie {

bool RationalPolytope::contains(const RatVector& v) const {
  if (v.size() != dim) return false;
  if (eq_lhs * v != eq_rhs) return false;
  const RatVector lhs = le_lhs * v;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] > le_rhs[i]) return false;
  return true;
}

RationalPolytope build_polytope(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc) {
  if (!check_assumption3(spec, sc)) throw AssumptionViolation(assumption3_defect(spec, sc));
  RationalPolytope p;
  p.coords = sc.j();
  p.dim = p.coords.size();
  p.eq_lhs = spec.g_basis.select_cols(p.coords);
  p.eq_rhs.assign(spec.d(), 0);
  for (std::size_t j : p.coords) p.eq_rhs = p.eq_rhs + alpha[j] * spec.eta(j);
  p.le_lhs = RatMatrix(0, p.dim);
  for (std::size_t k = 0; k < p.dim; ++k) {
    RatVector row(p.dim);
    const bool plus = std::find(sc.j_plus.begin(), sc.j_plus.end(), p.coords[k]) != sc.j_plus.end();
    row[k] = plus ? -1 : 1;
    p.le_lhs.append_row(row);
    p.le_rhs.push_back(plus ? 0 : -1);
  }
  p.box = bounding_box(p);
  if (!p.box) throw InconsistencyError("P_J is empty although it must contain alpha_J");
  return p;
}

std::optional<Box> bounding_box(const RationalPolytope& p) {
  if (p.box) return p.box;
  auto base = [&] {
    LinearProgram lp(p.dim);
    for (std::size_t r = 0; r < p.eq_lhs.rows(); ++r) lp.add_equality(p.eq_lhs.row(r), p.eq_rhs[r]);
    for (std::size_t r = 0; r < p.le_lhs.rows(); ++r) lp.add_less_equal(p.le_lhs.row(r), p.le_rhs[r]);
    return lp;
  };
  {
    const LpResult feas = lp_solve(base());
    if (feas.status == LpStatus::Infeasible) return std::nullopt;
  }
  Box box(p.dim);
  for (std::size_t k = 0; k < p.dim; ++k) {
    RatVector e(p.dim);
    e[k] = 1;
    LinearProgram hi = base();
    hi.maximize(e);
    const LpResult rh = lp_solve(hi);
    LinearProgram lo = base();
    lo.minimize(e);
    const LpResult rl = lp_solve(lo);
    if (rh.status != LpStatus::Optimal || rl.status != LpStatus::Optimal)
      throw InconsistencyError("polytope is unbounded in coordinate " + std::to_string(k + 1));
    box[k] = {-rl.value, rh.value};
  }
  return box;
}

Box witness_formula_box(const ArrangementSpec&, const Point& alpha, const SignConfiguration& sc,
                        const PartitionCertificate& cert) {
  const auto j = sc.j();
  auto is_plus = [&](std::size_t k) { return std::find(sc.j_plus.begin(), sc.j_plus.end(), k) != sc.j_plus.end(); };
  // Lambda_j(v) = -v_j on J+, v_j on J-; Lambda_j <= 0 on J+, <= -1 on J-.
  std::vector<Rational> z, cap;
  Rational level = 0;
  for (std::size_t k : j) {
    const auto it = cert.witness_z.find(k);
    if (it == cert.witness_z.end() || it->second <= 0)
      throw InconsistencyError("z-witness is not positive on J");
    z.push_back(it->second);
    cap.push_back(is_plus(k) ? 0 : -1);
    level += it->second * (is_plus(k) ? -alpha[k] : alpha[k]);
  }
  Box box(j.size());
  for (std::size_t a = 0; a < j.size(); ++a) {
    Rational others = 0;
    for (std::size_t b = 0; b < j.size(); ++b)
      if (b != a) others += z[b] * cap[b];
    const Rational lambda_lo = (level - others) / z[a];
    if (is_plus(j[a]))
      box[a] = {0, -lambda_lo};
    else
      box[a] = {lambda_lo, -1};
  }
  return box;
}

bool box_contains(const Box& outer, const Box& inner) {
  if (outer.size() != inner.size()) return false;
  for (std::size_t k = 0; k < outer.size(); ++k)
    if (inner[k].lo < outer[k].lo || inner[k].hi > outer[k].hi) return false;
  return true;
}

namespace {

// Integer points of P written as x = x0 + K y, y in Z^m, with the inequalities in y projected
// by Fourier-Motzkin: level k holds the constraints on y_1..y_k, so every prefix that passes
// level k extends to a real point of P.
class LatticeWalker {
 public:
  explicit LatticeWalker(const RationalPolytope& p) {
    const auto x0 = integer_solution(p.eq_lhs, p.eq_rhs);
    if (!x0) return;
    x0_ = *x0;
    IntMatrix basis = p.eq_lhs.rows() == 0 ? identity(p.dim) : integer_kernel_basis(p.eq_lhs);
    size_reduce(basis);
    kernel_ = std::move(basis);
    const std::size_t m = kernel_.size();
    std::vector<Row> rows;
    RatVector x0r(x0_.begin(), x0_.end());
    const RatVector slack = p.le_rhs - p.le_lhs * x0r;
    for (std::size_t r = 0; r < p.le_lhs.rows(); ++r) {
      Row row{RatVector(m), slack[r]};
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t c = 0; c < p.dim; ++c) row.coef[k] += p.le_lhs(r, c) * Rational(kernel_[k][c]);
      rows.push_back(std::move(row));
    }
    levels_.assign(m, {});
    bool unbounded = false;
    for (std::size_t k = m; k-- > 0;) {
      std::vector<Row> keep;
      std::vector<Row> upper, lower;
      for (auto& row : rows) {
        if (!normalize(row)) return;
        if (row.coef[k] > 0)
          upper.push_back(row);
        else if (row.coef[k] < 0)
          lower.push_back(row);
        else
          keep.push_back(row);
      }
      levels_[k].insert(levels_[k].end(), upper.begin(), upper.end());
      levels_[k].insert(levels_[k].end(), lower.begin(), lower.end());
      if (upper.empty() || lower.empty()) unbounded = true;
      for (const auto& u : upper)
        for (const auto& l : lower) {
          const Rational wu = -l.coef[k], wl = u.coef[k];
          Row comb{RatVector(m), wu * u.rhs + wl * l.rhs};
          for (std::size_t c = 0; c < k; ++c) comb.coef[c] = wu * u.coef[c] + wl * l.coef[c];
          keep.push_back(std::move(comb));
        }
      rows = dedupe(std::move(keep));
    }
    for (auto& row : rows)
      if (row.rhs < 0) return;
    if (unbounded) throw InconsistencyError("polytope is unbounded along a lattice direction");
    feasible_ = true;
  }

  template <typename Leaf>
  void walk(const Leaf& leaf) const {
    if (!feasible_) return;
    std::vector<Integer> y;
    y.reserve(kernel_.size());
    descend(y, leaf);
  }

  IntVector point(const std::vector<Integer>& y) const {
    IntVector x = x0_;
    for (std::size_t k = 0; k < y.size(); ++k)
      for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[k] * kernel_[k][c];
    return x;
  }

  std::size_t rank() const { return kernel_.size(); }

 private:
  struct Row {
    RatVector coef;
    Rational rhs;
  };

  static IntMatrix identity(std::size_t n) {
    IntMatrix id(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }

  // Scales so the largest coefficient has absolute value 1; false for 0 <= negative.
  static bool normalize(Row& row) {
    Rational big = 0;
    for (const auto& c : row.coef) big = std::max<Rational>(big, abs(c));
    if (big == 0) return row.rhs >= 0;
    for (auto& c : row.coef) c /= big;
    row.rhs /= big;
    return true;
  }

  static std::vector<Row> dedupe(std::vector<Row> rows) {
    std::vector<Row> out;
    for (auto& row : rows) {
      normalize(row);
      bool dominated = false;
      for (auto& o : out)
        if (o.coef == row.coef) {
          if (row.rhs < o.rhs) o.rhs = row.rhs;
          dominated = true;
          break;
        }
      if (!dominated) out.push_back(std::move(row));
    }
    return out;
  }

  // Integer range for y_k given y_1..y_{k-1}; empty when lo > hi.
  std::pair<Integer, Integer> range(const std::vector<Integer>& y) const {
    const std::size_t k = y.size();
    std::optional<Rational> lo, hi;
    for (const auto& row : levels_[k]) {
      Rational rest = row.rhs;
      for (std::size_t c = 0; c < k; ++c)
        if (row.coef[c] != 0) rest -= row.coef[c] * Rational(y[c]);
      const Rational bound = rest / row.coef[k];
      if (row.coef[k] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    return {ceil(*lo), floor(*hi)};
  }

  template <typename Leaf>
  void descend(std::vector<Integer>& y, const Leaf& leaf) const {
    if (y.size() == kernel_.size()) {
      leaf(y, Integer(1));
      return;
    }
    const auto [lo, hi] = range(y);
    if (lo > hi) return;
    if (y.size() + 1 == kernel_.size() && !Leaf::wants_points) {
      y.push_back(lo);
      leaf(y, Integer(hi - lo + 1));
      y.pop_back();
      return;
    }
    for (Integer v = lo; v <= hi; ++v) {
      y.push_back(v);
      descend(y, leaf);
      y.pop_back();
    }
  }

  bool feasible_ = false;
  IntVector x0_;
  IntMatrix kernel_;
  std::vector<std::vector<Row>> levels_;
};

struct PointCollector {
  static constexpr bool wants_points = true;
  const LatticeWalker* walker;
  std::vector<IntVector>* out;
  void operator()(const std::vector<Integer>& y, const Integer&) const { out->push_back(walker->point(y)); }
};

struct PointCounter {
  static constexpr bool wants_points = false;
  Integer* total;
  void operator()(const std::vector<Integer>&, const Integer& n) const { *total += n; }
};

}  // namespace

std::vector<IntVector> enumerate_lattice_points(const RationalPolytope& p) {
  std::vector<IntVector> points;
  const LatticeWalker walker(p);
  walker.walk(PointCollector{&walker, &points});
  std::sort(points.begin(), points.end());
  return points;
}

Integer count_lattice_points(const RationalPolytope& p) {
  Integer total = 0;
  LatticeWalker(p).walk(PointCounter{&total});
  return total;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t start,
                     const auto& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    for_each_subset(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RatVector> vertex_enumeration(const RationalPolytope& p) {
  std::vector<RatVector> vertices;
  const std::size_t eq_rank = rank(p.eq_lhs);
  if (eq_rank > p.dim || p.dim - eq_rank > p.le_lhs.rows()) return vertices;
  const std::size_t need = p.dim - eq_rank;
  std::vector<std::size_t> cur;
  for_each_subset(p.le_lhs.rows(), need, cur, 0, [&](const std::vector<std::size_t>& active) {
    RatMatrix a = p.eq_lhs;
    RatVector b = p.eq_rhs;
    for (std::size_t r : active) {
      a.append_row(p.le_lhs.row(r));
      b.push_back(p.le_rhs[r]);
    }
    if (rank(a) != p.dim) return;
    const auto x = solve_linear(a, b);
    if (!x || !p.contains(*x)) return;
    if (std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) vertices.push_back(*x);
  });
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

long affine_hull_dimension(const RationalPolytope& p) {
  const auto vs = vertex_enumeration(p);
  if (vs.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t k = 1; k < vs.size(); ++k) diffs.push_back(vs[k] - vs[0]);
  return static_cast<long>(rank_of(diffs, p.dim));
}

std::vector<std::size_t> active_inequalities(const RationalPolytope& p, const RatVector& v) {
  std::vector<std::size_t> out;
  const RatVector lhs = p.le_lhs * v;
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (lhs[r] == p.le_rhs[r]) out.push_back(r);
  return out;
}

RationalPolytope scale(const RationalPolytope& p, const Rational& q) {
  RationalPolytope out = p;
  out.eq_rhs = q * p.eq_rhs;
  out.le_rhs = q * p.le_rhs;
  out.box.reset();
  if (p.box && q >= 0) {
    out.box = Box{};
    for (const auto& iv : *p.box) out.box->push_back({q * iv.lo, q * iv.hi});
  }
  return out;
}

RationalPolytope translate(const RationalPolytope& p, const RatVector& t) {
  RationalPolytope out = p;
  out.eq_rhs = p.eq_rhs - p.eq_lhs * t;
  out.le_rhs = p.le_rhs - p.le_lhs * t;
  out.box.reset();
  if (p.box) {
    out.box = Box{};
    for (std::size_t k = 0; k < p.dim; ++k) out.box->push_back({(*p.box)[k].lo - t[k], (*p.box)[k].hi - t[k]});
  }
  return out;
}

std::vector<Point> dset_representatives(const ArrangementSpec& spec, const Point& alpha, const SignConfiguration& sc,
                                        const RationalPolytope& p) {
  if (!check_assumption3(spec, sc)) throw AssumptionViolation(assumption3_defect(spec, sc));
  std::vector<Point> out;
  for (const auto& v : enumerate_lattice_points(p)) {
    Point delta = alpha;
    for (std::size_t k = 0; k < p.dim; ++k) delta[p.coords[k]] = v[k];
    if (!fiber_membership(spec, delta))
      throw InconsistencyError("lifted representative " + to_string(delta) + " is off the fiber");
    out.push_back(std::move(delta));
  }
  return out;
}

}  // namespace goldie
