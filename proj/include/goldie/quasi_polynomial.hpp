#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "goldie/rational.hpp"

namespace goldie {

/// Polynomial with periodic coefficients: for t = rho (mod period) the value is
/// sum_k coefficients[rho][k] * t^k (constant term first).
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(std::size_t period, std::vector<RatVector> coefficients);

  std::size_t period() const { return period_; }
  const std::vector<RatVector>& coefficients() const { return coeffs_; }
  /// Highest power with a nonzero coefficient in any branch; -1 for the zero function.
  long degree() const;

  Rational operator()(const Integer& t) const;
  Rational operator()(long t) const { return (*this)(Integer(t)); }

  /// x -> p(a x + b) as a quasi-polynomial in x (same period, then minimized).
  QuasiPolynomial compose_linear(const Integer& a, const Integer& b) const;
  /// Smallest period dividing the current one that reproduces every branch.
  QuasiPolynomial minimize_period() const;

  /// "m" on the first line, then m lines of space-separated coefficients.
  std::string serialize() const;
  static QuasiPolynomial parse(const std::string& text);

  bool operator==(const QuasiPolynomial&) const = default;

 private:
  std::size_t period_ = 1;
  std::vector<RatVector> coeffs_{RatVector{}};
};

/// Human-readable branch, e.g. "3/2 x + 1/2".
std::string format_polynomial(const RatVector& coefficients, const std::string& var);

}  // namespace goldie
