#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "goldie/arrangement.hpp"
#include "goldie/lattice.hpp"

namespace goldie {

/// The unique split T = I_T + J with exact witnesses: sum_k z_k lambda_k vanishes on
/// E = ker G, z_j > 0 exactly on J, lambda_i(e) > 0 on I_T and lambda_j(e) = 0 on J.
struct PartitionCertificate {
  std::vector<std::size_t> t;
  std::vector<std::size_t> j;
  std::vector<std::size_t> i_t;
  RatVector witness_e;
  std::map<std::size_t, Rational> witness_z;
};

/// Decides J by one LP feasibility check per index of T, then solves one LP for e.
PartitionCertificate partition_indices(const ArrangementSpec& spec, const ConstraintSystem& cs);

/// Checks every certificate clause exactly; functional vanishing is tested on a kernel basis of G.
bool certificate_valid(const ArrangementSpec& spec, const ConstraintSystem& cs, const PartitionCertificate& cert);

struct SignConfiguration {
  std::vector<std::size_t> j_plus;
  std::vector<std::size_t> j_minus;
  /// Every index of 1..n outside J, not only T \ J.
  std::vector<std::size_t> i;

  std::vector<std::size_t> j() const;
  bool in_j(std::size_t k) const;
  bool operator==(const SignConfiguration&) const = default;
};

SignConfiguration sign_configuration(const PartitionCertificate& cert, const Point& alpha, std::size_t n);

/// g* = span{eta_j : j in J} (+) span{eta_i : i in I}, i.e. the two ranks add up to d.
bool check_assumption3(const ArrangementSpec& spec, const SignConfiguration& sc);
/// Human-readable rank defect; empty when the assumption holds.
std::string assumption3_defect(const ArrangementSpec& spec, const SignConfiguration& sc);

/// theta-coset data of a closure M_J intersected with M_theta.
struct RegionClosure {
  ArrangementSpec spec;
  Point alpha;
  ConstraintSystem constraints;
  PartitionCertificate certificate;
  SignConfiguration signs;
  /// sum_{j in J} alpha_j eta_j in Q^d.
  RatVector theta;
  /// Generated by eta_i, i in I.
  IntegerLattice i_lattice;
};

RegionClosure region_closure(const ArrangementSpec& spec, const Point& alpha);

bool closure_membership(const RegionClosure& rc, const Point& gamma);

/// True iff closure(alpha) is contained in closure(beta). Throws ValidationError when the
/// two closures do not share (G, chi).
bool closure_inclusion(const RegionClosure& rc_alpha, const RegionClosure& rc_beta);

/// Components V(h - chi_k(h)): h is spanned by sign_j * pi_j (j in J), realised as vectors of
/// Q^n; character k is (sign_j * delta_j)_{j in J} for representative delta_k.
struct ComponentFibers {
  std::vector<RatVector> h_basis;
  std::vector<RatVector> characters;
};

ComponentFibers component_fibers(const RegionClosure& rc, const std::vector<Point>& dset);

}  // namespace goldie
