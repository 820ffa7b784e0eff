#include "goldie/closure.hpp"

#include <algorithm>
#include <sstream>

#include "goldie/error.hpp"
#include "goldie/linear_program.hpp"

namespace goldie {

namespace {

// lambda_k(b) for every k in T and every kernel basis vector b: rows indexed by T.
std::vector<RatVector> restricted_functionals(const ConstraintSystem& cs, const std::vector<RatVector>& kernel) {
  std::vector<RatVector> rows;
  for (const auto& c : cs.constraints) {
    RatVector row(kernel.size());
    for (std::size_t l = 0; l < kernel.size(); ++l) row[l] = Rational(c.sign) * kernel[l][c.index];
    rows.push_back(std::move(row));
  }
  return rows;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", eta" : "eta") + std::to_string(v[k] + 1);
  return s + "}";
}

}  // namespace

PartitionCertificate partition_indices(const ArrangementSpec& spec, const ConstraintSystem& cs) {
  const std::vector<RatVector> kernel = kernel_basis(spec.g_basis);
  const std::vector<RatVector> lam = restricted_functionals(cs, kernel);
  const std::size_t m = cs.size();

  PartitionCertificate cert;
  cert.t = cs.indices();
  RatVector z_sum(m);
  std::vector<bool> in_j(m, false);
  for (std::size_t target = 0; target < m; ++target) {
    LinearProgram lp(m);
    for (std::size_t k = 0; k < m; ++k) lp.add_lower_bound(k, 0);
    lp.add_lower_bound(target, 1);
    for (std::size_t l = 0; l < kernel.size(); ++l) {
      RatVector row(m);
      for (std::size_t k = 0; k < m; ++k) row[k] = lam[k][l];
      lp.add_equality(row, 0);
    }
    const LpResult res = lp_solve(lp);
    if (res.status == LpStatus::Infeasible) continue;
    if (res.status != LpStatus::Feasible) throw InconsistencyError("partition LP returned an unexpected verdict");
    in_j[target] = true;
    z_sum = z_sum + res.point;
  }
  for (std::size_t k = 0; k < m; ++k) {
    (in_j[k] ? cert.j : cert.i_t).push_back(cert.t[k]);
    if (in_j[k]) cert.witness_z[cert.t[k]] = z_sum[k];
    else if (z_sum[k] != 0) throw InconsistencyError("summed z witness is supported outside J");
  }

  // e = sum_l y_l b_l with lambda_j(e) = 0 on J and lambda_i(e) >= 1 on I_T.
  cert.witness_e.assign(spec.n, 0);
  if (!cert.i_t.empty()) {
    LinearProgram lp(kernel.size());
    for (std::size_t k = 0; k < m; ++k) {
      if (in_j[k])
        lp.add_equality(lam[k], 0);
      else
        lp.add_greater_equal(lam[k], 1);
    }
    const LpResult res = lp_solve(lp);
    if (res.status != LpStatus::Feasible)
      throw InconsistencyError("no e-witness exists for the computed partition");
    for (std::size_t l = 0; l < kernel.size(); ++l) cert.witness_e = cert.witness_e + res.point[l] * kernel[l];
  }
  if (!certificate_valid(spec, cs, cert)) throw InconsistencyError("partition certificate failed validation");
  return cert;
}

bool certificate_valid(const ArrangementSpec& spec, const ConstraintSystem& cs, const PartitionCertificate& cert) {
  if (cert.t != cs.indices()) return false;
  if (cert.j.size() + cert.i_t.size() != cert.t.size()) return false;
  if (spec.g_basis * cert.witness_e != RatVector(spec.d())) return false;
  const std::vector<RatVector> kernel = kernel_basis(spec.g_basis);
  for (const auto& b : kernel) {
    Rational s = 0;
    for (const auto& c : cs.constraints) {
      const auto it = cert.witness_z.find(c.index);
      if (it != cert.witness_z.end()) s += it->second * Rational(c.sign) * b[c.index];
    }
    if (s != 0) return false;
  }
  for (const auto& c : cs.constraints) {
    const Rational lambda_e = Rational(c.sign) * cert.witness_e[c.index];
    const auto it = cert.witness_z.find(c.index);
    const Rational z = it == cert.witness_z.end() ? Rational(0) : it->second;
    if (contains(cert.j, c.index)) {
      if (!(z > 0) || lambda_e != 0) return false;
    } else if (contains(cert.i_t, c.index)) {
      if (z != 0 || !(lambda_e > 0)) return false;
    } else {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> SignConfiguration::j() const {
  std::vector<std::size_t> out = j_plus;
  out.insert(out.end(), j_minus.begin(), j_minus.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool SignConfiguration::in_j(std::size_t k) const { return contains(j_plus, k) || contains(j_minus, k); }

SignConfiguration sign_configuration(const PartitionCertificate& cert, const Point& alpha, std::size_t n) {
  SignConfiguration sc;
  for (std::size_t k : cert.j) (alpha.at(k) >= 0 ? sc.j_plus : sc.j_minus).push_back(k);
  for (std::size_t k = 0; k < n; ++k)
    if (!contains(cert.j, k)) sc.i.push_back(k);
  return sc;
}

namespace {

std::vector<RatVector> etas(const ArrangementSpec& spec, const std::vector<std::size_t>& idx) {
  std::vector<RatVector> out;
  for (std::size_t k : idx) out.push_back(spec.eta(k));
  return out;
}

}  // namespace

bool check_assumption3(const ArrangementSpec& spec, const SignConfiguration& sc) {
  return rank_of(etas(spec, sc.j()), spec.d()) + rank_of(etas(spec, sc.i), spec.d()) == spec.d();
}

std::string assumption3_defect(const ArrangementSpec& spec, const SignConfiguration& sc) {
  if (check_assumption3(spec, sc)) return {};
  const auto j = sc.j();
  const std::size_t rank_j = rank_of(etas(spec, j), spec.d());
  const std::size_t rank_i = rank_of(etas(spec, sc.i), spec.d());
  std::ostringstream msg;
  msg << "direct-sum condition violated: rank span" << index_list(j) << " = " << rank_j << ", rank span"
      << index_list(sc.i) << " = " << rank_i << ", sum " << rank_j + rank_i << " > d = " << spec.d();
  for (std::size_t i : sc.i) {
    if (is_zero(spec.eta(i))) continue;
    auto with_i = etas(spec, j);
    with_i.push_back(spec.eta(i));
    if (rank_of(with_i, spec.d()) == rank_j)
      msg << "; span overlap: eta" << i + 1 << " in span" << index_list(j);
  }
  return msg.str();
}

RegionClosure region_closure(const ArrangementSpec& spec, const Point& alpha) {
  ConstraintSystem cs = constraint_system(spec, alpha);
  PartitionCertificate cert = partition_indices(spec, cs);
  SignConfiguration sc = sign_configuration(cert, alpha, spec.n);
  RatVector theta(spec.d());
  for (std::size_t j : sc.j()) theta = theta + alpha[j] * spec.eta(j);
  IntegerLattice lat(etas(spec, sc.i), spec.d());
  return RegionClosure{spec, alpha, std::move(cs), std::move(cert), std::move(sc), std::move(theta), std::move(lat)};
}

bool closure_membership(const RegionClosure& rc, const Point& gamma) {
  if (!fiber_membership(rc.spec, gamma)) return false;
  for (std::size_t j : rc.signs.j_plus)
    if (!is_integer(gamma[j]) || gamma[j] < 0) return false;
  for (std::size_t j : rc.signs.j_minus)
    if (!is_integer(gamma[j]) || gamma[j] >= 0) return false;
  RatVector lhs(rc.spec.d());
  for (std::size_t j : rc.signs.j()) lhs = lhs + gamma[j] * rc.spec.eta(j);
  return rc.i_lattice.contains(lhs - rc.theta);
}

bool closure_inclusion(const RegionClosure& rc_alpha, const RegionClosure& rc_beta) {
  if (!(rc_alpha.spec.g_basis == rc_beta.spec.g_basis) || rc_alpha.spec.chi != rc_beta.spec.chi ||
      rc_alpha.spec.r != rc_beta.spec.r)
    throw ValidationError("closure_inclusion: the two closures belong to different arrangements");
  auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::all_of(a.begin(), a.end(), [&](std::size_t x) { return contains(b, x); });
  };
  if (!subset(rc_beta.signs.j_plus, rc_alpha.signs.j_plus)) return false;
  if (!subset(rc_beta.signs.j_minus, rc_alpha.signs.j_minus)) return false;
  return rc_beta.i_lattice.contains(rc_beta.theta - rc_alpha.theta);
}

ComponentFibers component_fibers(const RegionClosure& rc, const std::vector<Point>& dset) {
  ComponentFibers out;
  const auto j = rc.signs.j();
  auto sign_of = [&](std::size_t k) { return contains(rc.signs.j_plus, k) ? -1 : 1; };
  for (std::size_t k : j) {
    RatVector h(rc.spec.n);
    h[k] = sign_of(k);
    out.h_basis.push_back(std::move(h));
  }
  for (const auto& delta : dset) {
    RatVector chi;
    for (std::size_t k : j) chi.push_back(Rational(sign_of(k)) * delta.at(k));
    out.characters.push_back(std::move(chi));
  }
  return out;
}

}  // namespace goldie
