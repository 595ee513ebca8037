#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace bitwist {

using Integer = mpz_class;

/// Integer Laurent polynomial in t, stored sparsely; zero coefficients are
/// never kept, so the empty map is the zero polynomial.
class LaurentPolynomial {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT(implicit)
  explicit LaurentPolynomial(const Terms& terms);

  static LaurentPolynomial monomial(Integer coeff, std::int64_t exponent);
  /// t
  static LaurentPolynomial t() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(std::int64_t exponent) const;
  std::int64_t min_exponent() const;  // requires non-zero
  std::int64_t max_exponent() const;  // requires non-zero

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Multiplies by t^s.
  LaurentPolynomial shifted(std::int64_t s) const;

  /// Unit normalization: lowest exponent 0 and positive constant term.
  LaurentPolynomial normalized() const;

  /// gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  /// "1 - t + t^2"; "0" for zero; negative exponents print as t^-1.
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(std::int64_t exponent, const Integer& coeff);
  Terms terms_;
};

}  // namespace bitwist
