#include "goldie/lattice.hpp"

#include <utility>

#include "goldie/error.hpp"

namespace goldie {

namespace {

// Row operations keep `transform` in sync so that transform * input == rows.
void hermite_in_place(IntMatrix& rows, IntMatrix* transform, std::size_t cols) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    // Euclid on column c over rows lead..end until a single nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = lead; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[lead], rows[best]);
      if (transform) std::swap((*transform)[lead], (*transform)[best]);
      bool done = true;
      for (std::size_t r = lead + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[lead][c].get_mpz_t());
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[lead][k];
        if (transform)
          for (std::size_t k = 0; k < (*transform)[r].size(); ++k) (*transform)[r][k] -= q * (*transform)[lead][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (lead >= rows.size() || rows[lead][c] == 0) continue;
    if (rows[lead][c] < 0) {
      for (auto& x : rows[lead]) x = -x;
      if (transform)
        for (auto& x : (*transform)[lead]) x = -x;
    }
    for (std::size_t r = 0; r < lead; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[lead][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[lead][k];
      if (transform)
        for (std::size_t k = 0; k < (*transform)[r].size(); ++k) (*transform)[r][k] -= q * (*transform)[lead][k];
    }
    ++lead;
  }
}

bool is_zero_row(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  hermite_in_place(rows, nullptr, cols);
  IntMatrix out;
  for (auto& r : rows)
    if (!is_zero_row(r)) out.push_back(std::move(r));
  return out;
}

HermiteDecomposition hermite_with_transform(const IntMatrix& rows) {
  HermiteDecomposition d;
  d.form = rows;
  d.transform.assign(rows.size(), IntVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) d.transform[i][i] = 1;
  if (rows.empty()) return d;
  hermite_in_place(d.form, &d.transform, rows.front().size());
  for (const auto& r : d.form)
    if (!is_zero_row(r)) ++d.rank;
  return d;
}

IntegerLattice::IntegerLattice(const std::vector<RatVector>& generators, std::size_t dim)
    : dim_(dim), scale_(1) {
  for (const auto& g : generators) {
    if (g.size() != dim) throw ValidationError("lattice generator has wrong dimension");
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), lcm_of_denominators(g).get_mpz_t());
  }
  IntMatrix rows;
  for (const auto& g : generators) {
    IntVector r(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const Rational scaled = g[k] * Rational(scale_);
      r[k] = scaled.get_num();
    }
    rows.push_back(std::move(r));
  }
  form_ = hermite_normal_form(std::move(rows));
}

bool IntegerLattice::contains(const RatVector& w) const {
  if (w.size() != dim_) throw ValidationError("lattice membership: dimension mismatch");
  IntVector residue(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const Rational scaled = w[k] * Rational(scale_);
    if (!is_integer(scaled)) return false;
    residue[k] = scaled.get_num();
  }
  std::size_t col = 0;
  for (const auto& row : form_) {
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    for (; col < pivot; ++col)
      if (residue[col] != 0) return false;
    if (!mpz_divisible_p(residue[pivot].get_mpz_t(), row[pivot].get_mpz_t())) return false;
    const Integer q = residue[pivot] / row[pivot];
    for (std::size_t k = pivot; k < dim_; ++k) residue[k] -= q * row[k];
    col = pivot + 1;
  }
  for (; col < dim_; ++col)
    if (residue[col] != 0) return false;
  return true;
}

bool lattice_membership(const RatVector& w, const std::vector<RatVector>& gens) {
  for (const auto& g : gens)
    if (g.size() != w.size()) throw ValidationError("lattice membership: dimension mismatch");
  return IntegerLattice(gens, w.size()).contains(w);
}

IntMatrix integer_kernel_basis(const RatMatrix& a) {
  // Scale each row of A to integers, then column-reduce: U * A^T = H, and the rows of U
  // belonging to zero rows of H form a Z-basis of the integer kernel.
  const std::size_t n = a.cols();
  IntMatrix at(n, IntVector(a.rows()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer d = lcm_of_denominators(a.row(r));
    for (std::size_t c = 0; c < n; ++c) at[c][r] = Rational(a(r, c) * Rational(d)).get_num();
  }
  if (a.rows() == 0) {
    IntMatrix id(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  const HermiteDecomposition h = hermite_with_transform(at);
  IntMatrix basis;
  for (std::size_t i = h.rank; i < n; ++i) basis.push_back(h.transform[i]);
  return basis;
}

std::optional<IntVector> integer_solution(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw ValidationError("integer solution: dimension mismatch");
  const std::size_t n = a.cols();
  if (a.rows() == 0) return IntVector(n);
  // With U * A^T = H and x = U^T y, the system reads H^T y = b; H is echelon, so the first
  // rank entries of y follow by forward substitution on the pivot columns.
  IntMatrix at(n, IntVector(a.rows()));
  RatVector rhs(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer d = lcm_of_denominators(a.row(r));
    for (std::size_t c = 0; c < n; ++c) at[c][r] = Rational(a(r, c) * Rational(d)).get_num();
    rhs[r] = b[r] * Rational(d);
  }
  const HermiteDecomposition h = hermite_with_transform(at);
  std::vector<Integer> y(h.rank);
  for (std::size_t k = 0; k < h.rank; ++k) {
    std::size_t pivot = 0;
    while (h.form[k][pivot] == 0) ++pivot;
    Rational v = rhs[pivot];
    for (std::size_t i = 0; i < k; ++i) v -= Rational(h.form[i][pivot] * y[i]);
    v /= Rational(h.form[k][pivot]);
    if (!is_integer(v)) return std::nullopt;
    y[k] = v.get_num();
  }
  for (std::size_t c = 0; c < a.rows(); ++c) {
    Rational v = 0;
    for (std::size_t k = 0; k < h.rank; ++k) v += Rational(h.form[k][c] * y[k]);
    if (v != rhs[c]) return std::nullopt;
  }
  IntVector x(n);
  for (std::size_t k = 0; k < h.rank; ++k)
    for (std::size_t c = 0; c < n; ++c) x[c] += y[k] * h.transform[k][c];
  return x;
}

void size_reduce(IntMatrix& basis) {
  auto dotp = [](const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Integer nj = dotp(basis[j], basis[j]);
        const Rational mu(dotp(basis[i], basis[j]), nj);
        const Integer q = floor(mu + Rational(1, 2));
        if (q == 0) continue;
        IntVector cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= q * basis[j][k];
        if (dotp(cand, cand) < dotp(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
  }
}

}  // namespace goldie
