#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "goldie/matrix.hpp"

namespace goldie {

/// Dense integer matrix; rows are vectors.
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form over Z: nonzero rows only, echelon, positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Hermite normal form with the unimodular transform: transform * input == form (all rows kept,
/// zero rows at the bottom).
struct HermiteDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};
HermiteDecomposition hermite_with_transform(const IntMatrix& rows);

/// The additive subgroup generated by finitely many rational vectors.
class IntegerLattice {
 public:
  IntegerLattice(const std::vector<RatVector>& generators, std::size_t dim);

  std::size_t dim() const { return dim_; }
  /// Common denominator D: the lattice lives in (1/D) Z^dim.
  const Integer& scale() const { return scale_; }
  /// Normal form of D * generators.
  const IntMatrix& normal_form() const { return form_; }
  std::size_t rank() const { return form_.size(); }

  bool contains(const RatVector& w) const;

 private:
  std::size_t dim_;
  Integer scale_;
  IntMatrix form_;
};

/// True iff w is an integer combination of gens.
bool lattice_membership(const RatVector& w, const std::vector<RatVector>& gens);

/// Z-basis of ker(A) intersected with Z^n (A rational).
IntMatrix integer_kernel_basis(const RatMatrix& a);

/// Some x in Z^n with A x = b, or nullopt if there is none.
std::optional<IntVector> integer_solution(const RatMatrix& a, const RatVector& b);

/// Pairwise size reduction: b_i -= round(<b_i,b_j>/<b_j,b_j>) b_j while a norm decreases.
void size_reduce(IntMatrix& basis);

}  // namespace goldie
