#include "goldie/quasi_polynomial.hpp"

#include <sstream>

#include "goldie/error.hpp"

namespace goldie {

namespace {

void trim(RatVector& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::size_t period, std::vector<RatVector> coefficients)
    : period_(period), coeffs_(std::move(coefficients)) {
  if (period_ == 0 || coeffs_.size() != period_)
    throw ValidationError("quasi-polynomial needs one coefficient row per residue class");
  std::size_t width = 0;
  for (auto& row : coeffs_) {
    trim(row);
    width = std::max(width, row.size());
  }
  for (auto& row : coeffs_) row.resize(width);
}

long QuasiPolynomial::degree() const {
  long deg = -1;
  for (const auto& row : coeffs_)
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) deg = std::max(deg, static_cast<long>(k));
  return deg;
}

Rational QuasiPolynomial::operator()(const Integer& t) const {
  Integer rho;
  mpz_fdiv_r_ui(rho.get_mpz_t(), t.get_mpz_t(), period_);
  const RatVector& row = coeffs_[rho.get_ui()];
  Rational value = 0;
  for (std::size_t k = row.size(); k-- > 0;) value = value * Rational(t) + row[k];
  return value;
}

QuasiPolynomial QuasiPolynomial::compose_linear(const Integer& a, const Integer& b) const {
  std::vector<RatVector> rows(period_);
  const std::size_t width = coeffs_.front().size();
  for (std::size_t rho = 0; rho < period_; ++rho) {
    Integer t = a * Integer(static_cast<unsigned long>(rho)) + b;
    Integer src;
    mpz_fdiv_r_ui(src.get_mpz_t(), t.get_mpz_t(), period_);
    const RatVector& p = coeffs_[src.get_ui()];
    // sum_k p_k (a x + b)^k expanded in x.
    RatVector out(width);
    for (std::size_t k = 0; k < width; ++k) {
      if (p[k] == 0) continue;
      for (std::size_t i = 0; i <= k; ++i) {
        Integer ai, bk;
        mpz_pow_ui(ai.get_mpz_t(), a.get_mpz_t(), i);
        mpz_pow_ui(bk.get_mpz_t(), b.get_mpz_t(), k - i);
        out[i] += p[k] * Rational(binomial(k, i) * ai * bk);
      }
    }
    rows[rho] = std::move(out);
  }
  return QuasiPolynomial(period_, std::move(rows)).minimize_period();
}

QuasiPolynomial QuasiPolynomial::minimize_period() const {
  for (std::size_t m = 1; m < period_; ++m) {
    if (period_ % m != 0) continue;
    bool same = true;
    for (std::size_t rho = 0; rho < period_ && same; ++rho) same = coeffs_[rho] == coeffs_[rho % m];
    if (same) return QuasiPolynomial(m, std::vector<RatVector>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(m)));
  }
  return *this;
}

std::string QuasiPolynomial::serialize() const {
  std::ostringstream out;
  out << period_ << '\n';
  for (const auto& row : coeffs_) {
    if (row.empty()) {
      out << "0\n";
      continue;
    }
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << to_string(row[k]);
    out << '\n';
  }
  return out.str();
}

QuasiPolynomial QuasiPolynomial::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty quasi-polynomial text");
  const long m = std::stol(line);
  if (m < 1) throw ValidationError("quasi-polynomial period must be positive");
  std::vector<RatVector> rows;
  for (long k = 0; k < m; ++k) {
    if (!std::getline(in, line)) throw ValidationError("quasi-polynomial text has too few rows");
    std::istringstream ls(line);
    RatVector row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    rows.push_back(std::move(row));
  }
  return QuasiPolynomial(static_cast<std::size_t>(m), std::move(rows));
}

std::string format_polynomial(const RatVector& c, const std::string& var) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const Rational mag = abs(c[k]);
    std::string term;
    if (k == 0 || mag != 1) term = to_string(mag);
    if (k > 0) {
      if (!term.empty()) term += ' ';
      term += var;
      if (k > 1) term += '^' + std::to_string(k);
    }
    if (out.empty())
      out = (c[k] < 0 ? "-" : "") + term;
    else
      out += (c[k] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace goldie
