#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goldie/rational.hpp"

namespace goldie::weyl {

using Exponents = std::vector<long>;

/// The localized extended Weyl algebra on n variables where x_1..x_r are polynomial
/// and x_{r+1}..x_n are invertible. Indices are 0-based in code, 1-based in text.
struct Algebra {
  std::size_t n = 0;
  std::size_t r = 0;
  bool invertible(std::size_t i) const { return i >= r; }
};

enum class Letter { X, D };

/// One generator power inside a product: x_i^e or d_i^e.
struct Factor {
  Letter letter;
  std::size_t index;
  long exponent;
  bool operator==(const Factor&) const = default;
};

using Word = std::vector<Factor>;

/// coefficient * x^a d^b with every x left of every d.
struct Monomial {
  Rational coefficient = 1;
  Exponents x;
  Exponents d;
};

/// Finite sum of normal-ordered monomials; no zero coefficients stored.
class Element {
 public:
  using Key = std::pair<Exponents, Exponents>;

  Element() = default;
  explicit Element(const Monomial& m);
  static Element scalar(const Algebra& a, const Rational& c);

  void add(const Key& key, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Monomial> monomials() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Rational& s) const;
  bool operator==(const Element&) const = default;

 private:
  std::map<Key, Rational> terms_;
};

/// Rewrites a product of generator powers into normal order using the defining relation
/// d x = x d + 1 and, for invertible variables, d x^{-k} = x^{-k} d - k x^{-k-1}.
/// Throws ValidationError for negative powers of non-invertible x or of any d.
Element normalize(const Algebra& a, const Word& word);
/// Re-normalizes every monomial (the identity on normal-ordered input).
Element normalize(const Algebra& a, const Element& e);

Element multiply(const Algebra& a, const Element& s, const Element& t);
Element commutator(const Algebra& a, const Element& s, const Element& t);

/// x-exponents minus d-exponents.
Exponents weight_of(const Monomial& m);

/// prod_i x_i^(alpha_i): d_i^{-alpha_i} for polynomial variables with alpha_i < 0, x_i^{alpha_i} otherwise.
Monomial build_a_alpha(const Algebra& a, const Exponents& alpha);

/// pi_i = x_i d_i.
Element pi(const Algebra& a, std::size_t i);

Word word_of(const Monomial& m);

struct Term {
  Rational coefficient;
  Word word;
};

/// Parses sums of products such as "2 x1^3 d2 - x3^-6 + 1". Indices are 1-based.
std::vector<Term> parse_expression(std::string_view text);
Element evaluate(const Algebra& a, const std::vector<Term>& terms);

std::string to_string(const Monomial& m);
std::string to_string(const Element& e);

}  // namespace goldie::weyl
