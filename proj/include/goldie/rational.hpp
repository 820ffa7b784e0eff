#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace goldie {

// GMP keeps mpq_class results canonical (lowest terms, positive denominator)
// for all arithmetic; parse_rational canonicalizes literals.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "p", "-p", "p/q". Throws ValidationError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer lcm_of_denominators(const RatVector& v);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
bool is_zero(const RatVector& v);
bool is_integral(const RatVector& v);

}  // namespace goldie
