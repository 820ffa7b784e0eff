#include <gtest/gtest.h>

#include <map>
#include <random>

#include "goldie/error.hpp"
#include "goldie/weyl_algebra.hpp"

using namespace goldie;
using namespace goldie::weyl;

namespace {

Element expr(const Algebra& a, const char* text) { return evaluate(a, parse_expression(text)); }

// Laurent polynomial in n variables: exponent vector -> coefficient
using Poly = std::map<std::vector<long>, Rational>;

Poly apply_factor(const Factor& f, const Poly& p) {
  Poly out;
  for (const auto& [key, coeff] : p) {
    auto e = key;
    Rational c = coeff;
    if (f.letter == Letter::X) {
      e[f.index] += f.exponent;
    } else {
      for (long k = 0; k < f.exponent; ++k) {
        c *= e[f.index];
        e[f.index] -= 1;
      }
    }
    if (c != 0) out[e] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly apply_word(const Word& w, Poly p) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = apply_factor(*it, p);
  return p;
}

Poly apply_element(const Element& e, const Poly& p) {
  Poly out;
  for (const auto& m : e.monomials())
    for (const auto& [k, c] : apply_word(word_of(m), p)) out[k] += c * m.coefficient;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Word random_word(const Algebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(0, 6), idx(0, a.n - 1);
  std::uniform_int_distribution<int> coin(0, 1), pos(0, 3), any(-3, 3);
  Word w(len(rng));
  for (auto& f : w) {
    f.index = idx(rng);
    f.letter = coin(rng) ? Letter::X : Letter::D;
    f.exponent = (f.letter == Letter::X && a.invertible(f.index)) ? any(rng) : pos(rng);
  }
  return w;
}

}  // namespace

TEST(Weyl, DefiningRelations) {
  const Algebra one{1, 1};
  EXPECT_EQ(expr(one, "d1 x1"), expr(one, "x1 d1 + 1"));
  EXPECT_EQ(expr(one, "d1 x1^2"), expr(one, "x1^2 d1 + 2 x1"));
  const Algebra a{3, 2};
  EXPECT_EQ(expr(a, "d3 x3^-1"), expr(a, "x3^-1 d3 - x3^-2"));
  EXPECT_EQ(expr(a, "d1 x2"), expr(a, "x2 d1"));
  EXPECT_EQ(expr(a, "x3 x3^-1"), Element::scalar(a, 1));
  EXPECT_EQ(expr(a, "x3^-1 x3"), Element::scalar(a, 1));
  EXPECT_THROW(expr(a, "x1^-1"), ValidationError);
  EXPECT_THROW(expr(a, "d3^-1"), ValidationError);
}

TEST(Weyl, Weights) {
  const Algebra a{3, 2};
  const Monomial m = build_a_alpha(a, {-4, 5, -6});
  EXPECT_EQ(Element(m), expr(a, "d1^4 x2^5 x3^-6"));
  EXPECT_EQ(weight_of(m), (Exponents{-4, 5, -6}));
  EXPECT_EQ(weight_of(pi(a, 0).monomials().front()), (Exponents{0, 0, 0}));
  EXPECT_EQ(weight_of(expr(a, "x1^2 d2").monomials().front()), (Exponents{2, -1, 0}));
  EXPECT_EQ(Element(build_a_alpha(a, {0, 0, 0})), Element::scalar(a, 1));
  const Algebra b{1, 1};
  EXPECT_EQ(Element(build_a_alpha(b, {3})), expr(b, "x1^3"));
}

TEST(Weyl, Commutators) {
  const Algebra a{3, 2};
  EXPECT_EQ(commutator(a, pi(a, 0), expr(a, "d1^2")), expr(a, "-2 d1^2"));
  EXPECT_TRUE(commutator(a, pi(a, 0), pi(a, 1)).is_zero());
  const Element a_alpha(build_a_alpha(a, {-4, 5, -6}));
  EXPECT_EQ(commutator(a, pi(a, 1), a_alpha), a_alpha * Rational(5));
}

TEST(Weyl, TorusActionOverBox) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      const Algebra a{n, r};
      std::vector<long> alpha(n, -2);
      for (bool more = true; more;) {
        const Element aa(build_a_alpha(a, alpha));
        for (std::size_t i = 0; i < n; ++i)
          EXPECT_EQ(commutator(a, pi(a, i), aa), aa * Rational(alpha[i]));
        more = false;
        for (std::size_t k = 0; k < n && !more; ++k) {
          if (alpha[k] < 2) {
            ++alpha[k];
            more = true;
          } else {
            alpha[k] = -2;
          }
        }
      }
    }
}

TEST(Weyl, NormalFormMatchesOperatorAction) {
  std::mt19937 rng(17);
  const Algebra a{3, 1};
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(a, rng);
    const Element nf = normalize(a, w);
    // generic exponents so that no falling factorial vanishes by accident
    const Poly probe{{{7, -5, 11}, Rational(1)}, {{2, 3, -4}, Rational(2)}};
    EXPECT_EQ(apply_element(nf, probe), apply_word(w, probe));
  }
}

TEST(Weyl, IdempotenceAndGrading) {
  std::mt19937 rng(23);
  const Algebra a{2, 1};
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = random_word(a, rng);
    const Element nf = normalize(a, w);
    EXPECT_EQ(normalize(a, nf), nf);
    Exponents weight(a.n, 0);
    for (const auto& f : w) weight[f.index] += f.letter == Letter::X ? f.exponent : -f.exponent;
    for (const auto& m : nf.monomials()) EXPECT_EQ(weight_of(m), weight);
  }
}

TEST(Weyl, ProductRespectsGrading) {
  std::mt19937 rng(29);
  const Algebra a{2, 1};
  for (int trial = 0; trial < 200; ++trial) {
    const Element s = normalize(a, random_word(a, rng));
    const Element t = normalize(a, random_word(a, rng));
    const Element st = multiply(a, s, t);
    for (const auto& ms : s.monomials())
      for (const auto& mt : t.monomials()) {
        const Element part = multiply(a, Element(ms), Element(mt));
        auto w = weight_of(ms);
        const auto wt = weight_of(mt);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += wt[i];
        for (const auto& m : part.monomials()) EXPECT_EQ(weight_of(m), w);
      }
    const Poly probe{{{5, -3}, Rational(1)}};
    EXPECT_EQ(apply_element(st, probe), apply_element(s, apply_element(t, probe)));
  }
}

TEST(Weyl, ParseAndPrint) {
  const Algebra a{3, 2};
  const Element e = expr(a, "2 x1^3 d2 - x3^-6 + 1");
  EXPECT_EQ(expr(a, to_string(e).c_str()), e);
  EXPECT_THROW(parse_expression("x0"), ValidationError);
  EXPECT_THROW(parse_expression("y1"), ValidationError);
  EXPECT_THROW(expr(a, "x4"), ValidationError);
}
