#include "bitwist/laurent.hpp"

#include "bitwist/errors.hpp"

namespace bitwist {

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(Integer coeff, std::int64_t exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPolynomial::add_term(std::int64_t exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPolynomial::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, Integer(-c));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Integer(ca * cb));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t s) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + s, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  LaurentPolynomial out = shifted(-min_exponent());
  if (out.terms_.begin()->second < 0) out = -out;
  return out;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool show_coeff = e == 0 || mag != 1;
    if (show_coeff) out += mag.get_str();
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace bitwist
