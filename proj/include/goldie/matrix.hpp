#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "goldie/rational.hpp"

namespace goldie {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from rows; all rows must have equal length. `cols` fixes the width when `rows` is empty.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols = 0);
  static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;
  std::vector<RatVector> row_list() const;
  void append_row(const RatVector& r);

  RatMatrix transpose() const;
  /// Submatrix keeping the listed columns in order.
  RatMatrix select_cols(const std::vector<std::size_t>& cols) const;
  RatMatrix select_rows(const std::vector<std::size_t>& rows) const;

  RatVector operator*(const RatVector& x) const;
  RatMatrix operator*(const RatMatrix& other) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank_of(const std::vector<RatVector>& vectors, std::size_t dim);

/// One exact solution of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

/// Rational basis of {x : A x = 0}; empty when the kernel is trivial.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

}  // namespace goldie
