#include "goldie/weyl_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "goldie/error.hpp"

namespace goldie::weyl {

Element::Element(const Monomial& m) { add({m.x, m.d}, m.coefficient); }

Element Element::scalar(const Algebra& a, const Rational& c) {
  Element e;
  e.add({Exponents(a.n, 0), Exponents(a.n, 0)}, c);
  return e;
}

void Element::add(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::vector<Monomial> Element::monomials() const {
  std::vector<Monomial> out;
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

Element Element::operator+(const Element& o) const {
  Element out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, c);
  return out;
}

Element Element::operator-(const Element& o) const {
  Element out = *this;
  for (const auto& [k, c] : o.terms_) out.add(k, -c);
  return out;
}

Element Element::operator*(const Rational& s) const {
  Element out;
  for (const auto& [k, c] : terms_) out.add(k, s * c);
  return out;
}

namespace {

void validate(const Algebra& a, const Word& word) {
  for (const auto& f : word) {
    if (f.index >= a.n)
      throw ValidationError("generator index " + std::to_string(f.index + 1) + " exceeds n = " + std::to_string(a.n));
    if (f.exponent >= 0) continue;
    if (f.letter == Letter::D)
      throw ValidationError("negative exponent on d" + std::to_string(f.index + 1));
    if (!a.invertible(f.index))
      throw ValidationError("negative exponent on non-invertible x" + std::to_string(f.index + 1));
  }
}

// Drops trivial factors and merges neighbours with the same letter and index.
void compact(Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& f : w) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().letter == f.letter && out.back().index == f.index) {
      out.back().exponent += f.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  w = std::move(out);
}

}  // namespace

Element normalize(const Algebra& a, const Word& word) {
  validate(a, word);
  Element result;
  std::deque<std::pair<Rational, Word>> work;
  work.emplace_back(Rational(1), word);
  while (!work.empty()) {
    auto [coef, w] = std::move(work.front());
    work.pop_front();
    compact(w);
    std::size_t pos = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].letter == Letter::D && w[k + 1].letter == Letter::X) {
        pos = k;
        break;
      }
    if (pos == w.size()) {
      Exponents xs(a.n, 0), ds(a.n, 0);
      for (const auto& f : w) (f.letter == Letter::X ? xs : ds)[f.index] += f.exponent;
      result.add({xs, ds}, coef);
      continue;
    }
    const Factor dpow = w[pos];
    const Factor xpow = w[pos + 1];
    if (dpow.index != xpow.index) {
      std::swap(w[pos], w[pos + 1]);
      work.emplace_back(coef, std::move(w));
      continue;
    }
    // d^b x^c = d^{b-1} (d x^c); rewrite the innermost d x^c.
    const std::size_t i = dpow.index;
    const long c = xpow.exponent;
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    if (dpow.exponent > 1) prefix.push_back({Letter::D, i, dpow.exponent - 1});
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    auto assemble = [&](std::initializer_list<Factor> middle) {
      Word out = prefix;
      out.insert(out.end(), middle);
      out.insert(out.end(), suffix.begin(), suffix.end());
      return out;
    };
    if (c > 0) {
      // d x x^{c-1} = x d x^{c-1} + x^{c-1}
      work.emplace_back(coef, assemble({{Letter::X, i, 1}, {Letter::D, i, 1}, {Letter::X, i, c - 1}}));
      work.emplace_back(coef, assemble({{Letter::X, i, c - 1}}));
    } else {
      // d x^{-k} = x^{-k} d - k x^{-k-1}
      work.emplace_back(coef, assemble({{Letter::X, i, c}, {Letter::D, i, 1}}));
      work.emplace_back(coef * c, assemble({{Letter::X, i, c - 1}}));
    }
  }
  return result;
}

Word word_of(const Monomial& m) {
  Word w;
  for (std::size_t i = 0; i < m.x.size(); ++i)
    if (m.x[i] != 0) w.push_back({Letter::X, i, m.x[i]});
  for (std::size_t i = 0; i < m.d.size(); ++i)
    if (m.d[i] != 0) w.push_back({Letter::D, i, m.d[i]});
  return w;
}

Element normalize(const Algebra& a, const Element& e) {
  Element out;
  for (const auto& m : e.monomials()) out = out + normalize(a, word_of(m)) * m.coefficient;
  return out;
}

Element multiply(const Algebra& a, const Element& s, const Element& t) {
  Element out;
  for (const auto& ms : s.monomials())
    for (const auto& mt : t.monomials()) {
      Word w = word_of(ms);
      const Word wt = word_of(mt);
      w.insert(w.end(), wt.begin(), wt.end());
      out = out + normalize(a, w) * (ms.coefficient * mt.coefficient);
    }
  return out;
}

Element commutator(const Algebra& a, const Element& s, const Element& t) {
  return multiply(a, s, t) - multiply(a, t, s);
}

Exponents weight_of(const Monomial& m) {
  Exponents w(m.x.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = m.x[i] - m.d[i];
  return w;
}

Monomial build_a_alpha(const Algebra& a, const Exponents& alpha) {
  if (alpha.size() != a.n) throw ValidationError("alpha has wrong length");
  Monomial m{1, Exponents(a.n, 0), Exponents(a.n, 0)};
  for (std::size_t i = 0; i < a.n; ++i) {
    if (!a.invertible(i) && alpha[i] < 0)
      m.d[i] = -alpha[i];
    else
      m.x[i] = alpha[i];
  }
  return m;
}

Element pi(const Algebra& a, std::size_t i) {
  Monomial m{1, Exponents(a.n, 0), Exponents(a.n, 0)};
  m.x.at(i) = 1;
  m.d.at(i) = 1;
  return Element(m);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw ValidationError("empty Weyl expression");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ValidationError("expected '+' or '-' at position " + std::to_string(pos_));
      }
      terms.push_back(parse_term(sign));
      first = false;
      skip();
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_int(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") throw ValidationError("expected integer at position " + std::to_string(start));
    return std::stol(std::string(tok));
  }

  Term parse_term(Rational coef) {
    Term t{coef, {}};
    bool any = false;
    for (;;) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        t.coefficient *= parse_rational(s_.substr(start, pos_ - start));
      } else if (c == 'x' || c == 'd') {
        ++pos_;
        const long idx = parse_int(false);
        if (idx < 1) throw ValidationError("generator indices start at 1");
        long e = 1;
        if (peek() == '^') {
          ++pos_;
          e = parse_int(true);
        }
        t.word.push_back({c == 'x' ? Letter::X : Letter::D, static_cast<std::size_t>(idx - 1), e});
      } else if (c == '*') {
        ++pos_;
        continue;
      } else {
        break;
      }
      any = true;
    }
    if (!any) throw ValidationError("empty term at position " + std::to_string(pos_));
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Term> parse_expression(std::string_view text) { return Parser(text).parse(); }

Element evaluate(const Algebra& a, const std::vector<Term>& terms) {
  Element out;
  for (const auto& t : terms) out = out + normalize(a, t.word) * t.coefficient;
  return out;
}

std::string to_string(const Monomial& m) {
  std::string body;
  auto emit = [&](char letter, std::size_t i, long e) {
    if (e == 0) return;
    if (!body.empty()) body += ' ';
    body += letter + std::to_string(i + 1);
    if (e != 1) body += '^' + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.x.size(); ++i) emit('x', i, m.x[i]);
  for (std::size_t i = 0; i < m.d.size(); ++i) emit('d', i, m.d[i]);
  if (body.empty()) return goldie::to_string(m.coefficient);
  if (m.coefficient == 1) return body;
  if (m.coefficient == -1) return "-" + body;
  return goldie::to_string(m.coefficient) + " " + body;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& m : e.monomials()) {
    std::string t = to_string(m);
    if (out.empty())
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

}  // namespace goldie::weyl
