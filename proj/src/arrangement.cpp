#include "goldie/arrangement.hpp"

#include "goldie/error.hpp"

namespace goldie {

namespace {

RatVector parse_vector(const std::vector<std::string>& literals) {
  RatVector v;
  v.reserve(literals.size());
  for (const auto& s : literals) v.push_back(parse_rational(s));
  return v;
}

}  // namespace

bool is_nonnegative_integer(const Rational& q) { return is_integer(q) && q >= 0; }

Instance validate_spec(const RawInstance& raw) {
  if (!raw.n) throw ValidationError("missing field 'n'");
  if (!raw.r) throw ValidationError("missing field 'r'");
  if (*raw.n < 1) throw ValidationError("n must be positive");
  if (*raw.r < 0 || *raw.r > *raw.n) throw ValidationError("r must satisfy 0 <= r <= n");
  const auto n = static_cast<std::size_t>(*raw.n);

  Instance inst;
  inst.spec.n = n;
  inst.spec.r = static_cast<std::size_t>(*raw.r);
  std::vector<RatVector> rows;
  for (const auto& row : raw.g_basis) {
    if (row.size() != n)
      throw ValidationError("g_basis row has " + std::to_string(row.size()) + " entries, expected n = " +
                            std::to_string(n));
    rows.push_back(parse_vector(row));
  }
  inst.spec.g_basis = RatMatrix::from_rows(rows, n);
  if (rank(inst.spec.g_basis) != rows.size())
    throw ValidationError("g_basis rows are linearly dependent (rank " + std::to_string(rank(inst.spec.g_basis)) +
                          " < " + std::to_string(rows.size()) + ")");
  if (raw.alpha) {
    inst.alpha = parse_vector(*raw.alpha);
    if (inst.alpha->size() != n) throw ValidationError("alpha must have n entries");
  }
  if (raw.chi) {
    inst.spec.chi = parse_vector(*raw.chi);
    if (inst.spec.chi.size() != rows.size()) throw ValidationError("chi must have one entry per g_basis row");
  } else if (inst.alpha) {
    inst.spec.chi = inst.spec.g_basis * *inst.alpha;
  } else {
    throw ValidationError("either chi or alpha must be given");
  }
  if (inst.alpha && inst.spec.g_basis * *inst.alpha != inst.spec.chi)
    throw ValidationError("alpha " + to_string(*inst.alpha) + " is not on the fiber G x = chi");
  return inst;
}

bool fiber_membership(const ArrangementSpec& spec, const Point& beta) {
  if (beta.size() != spec.n) throw ValidationError("point has wrong dimension");
  return spec.g_basis * beta == spec.chi;
}

std::vector<std::size_t> ConstraintSystem::indices() const {
  std::vector<std::size_t> out;
  for (const auto& c : constraints) out.push_back(c.index);
  return out;
}

ConstraintSystem constraint_system(const ArrangementSpec& spec, const Point& alpha) {
  if (!fiber_membership(spec, alpha)) throw ValidationError("alpha " + to_string(alpha) + " is not on the fiber G x = chi");
  ConstraintSystem cs;
  for (std::size_t i = 0; i < spec.r; ++i) {
    if (!is_integer(alpha[i])) continue;
    const Integer a = alpha[i].get_num();
    if (a >= 0)
      cs.constraints.push_back({i, -1, a});
    else
      cs.constraints.push_back({i, +1, -a - 1});
  }
  return cs;
}

bool support_membership(const ArrangementSpec& spec, const Point& alpha, const Point& beta) {
  if (alpha.size() != spec.n || beta.size() != spec.n) throw ValidationError("point has wrong dimension");
  if (!is_integral(beta - alpha)) return false;
  if (!fiber_membership(spec, beta)) return false;
  for (std::size_t i = 0; i < spec.r; ++i)
    if (is_nonnegative_integer(beta[i]) != is_nonnegative_integer(alpha[i])) return false;
  return true;
}

ArrangementSpec change_basis(const ArrangementSpec& spec, const RatMatrix& m) {
  if (m.rows() != spec.d() || m.cols() != spec.d() || rank(m) != spec.d())
    throw ValidationError("basis change must be an invertible d x d matrix");
  ArrangementSpec out = spec;
  out.g_basis = m * spec.g_basis;
  out.chi = m * spec.chi;
  return out;
}

ArrangementSpec dilate(const ArrangementSpec& spec, const Rational& x) {
  ArrangementSpec out = spec;
  out.chi = x * spec.chi;
  return out;
}

}  // namespace goldie
