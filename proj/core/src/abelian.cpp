#include "bitwist/abelian.hpp"

#include <vector>

#include "bitwist/errors.hpp"

namespace bitwist::abelian {

LaurentPolynomial exponent_polynomial_from_word(const CyclicPresentation& cp) {
  LaurentPolynomial::Terms terms;
  for (const Letter& l : cp.defining_word.letters()) {
    terms[static_cast<std::int64_t>(l.gen % cp.n)] += l.exp;
  }
  return LaurentPolynomial(terms);
}

LaurentPolynomial q_polynomial(const MultiplierFunction& mf, std::size_t i) {
  if (i > mf.k()) throw InvalidArgument("Q index beyond k");
  const Integer m(static_cast<long>(mf.lon()[i]));
  Integer middle = mf.lat()[i] + 2 * m;
  if (i < mf.k()) middle += mf.lat()[i + 1];
  return LaurentPolynomial::monomial(m, 1) - LaurentPolynomial::monomial(middle, 0) +
         LaurentPolynomial::monomial(m, -1);
}

LaurentPolynomial exponent_polynomial_via_Q(const MultiplierFunction& mf) {
  // N_{k+2} = 0, N_{k+1} = 1, walking down to N_0.
  LaurentPolynomial after_next(0);
  LaurentPolynomial next(1);
  for (std::size_t i = mf.levels(); i-- > 0;) {
    LaurentPolynomial current = q_polynomial(mf, i) * next - after_next;
    after_next = std::move(next);
    next = std::move(current);
  }
  return next.normalized();
}

LaurentPolynomial fold_mod_n(const LaurentPolynomial& p, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("fold needs n >= 1");
  const auto modulus = static_cast<std::int64_t>(n);
  LaurentPolynomial::Terms terms;
  for (const auto& [e, c] : p.terms()) terms[((e % modulus) + modulus) % modulus] += c;
  return LaurentPolynomial(terms);
}

bool equal_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q, std::uint32_t n) {
  const LaurentPolynomial fq = fold_mod_n(q, n);
  for (std::uint32_t s = 0; s < n; ++s) {
    const LaurentPolynomial candidate = fold_mod_n(p.shifted(s), n);
    if (candidate == fq || -candidate == fq) return true;
  }
  return false;
}

IntMatrix circulant(const LaurentPolynomial& p, std::uint32_t n) {
  IntMatrix out(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const LaurentPolynomial row = fold_mod_n(p.shifted(j), n);
    for (const auto& [e, c] : row.terms()) {
      out(j, static_cast<std::size_t>(e)) = c;
    }
  }
  return out;
}

IntMatrix exponent_matrix(const FinitePresentation& pres) {
  pres.validate();
  IntMatrix out(pres.relators.size(), pres.generator_count);
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (const Letter& l : pres.relators[r].letters()) out(r, l.gen) += l.exp;
  }
  return out;
}

AbelianInvariants abelianization(const FinitePresentation& pres) {
  return smith_normal_form(exponent_matrix(pres));
}

AbelianInvariants homology(const MultiplierFunction& mf, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("cover degree must be positive");
  return smith_normal_form(circulant(exponent_polynomial_via_Q(mf), n));
}

AbelianInvariants homology_via_presentation(const MultiplierFunction& mf, std::uint32_t n) {
  const auto pres = presentation::branched_cover_relators(mf, n);
  const auto cyclic = presentation::eliminate_to_cyclic(pres, mf, n);
  return smith_normal_form(circulant(exponent_polynomial_from_word(cyclic), n));
}

Integer fibonacci_order(std::uint32_t n) {
  if (n == 0) throw InvalidArgument("Fibonacci group needs n >= 1");
  Integer f_n, f_n_minus_1;
  mpz_fib2_ui(f_n.get_mpz_t(), f_n_minus_1.get_mpz_t(), n);
  const Integer f_n_plus_1 = f_n + f_n_minus_1;
  Integer lucas = f_n_minus_1 + f_n_plus_1;
  return n % 2 == 1 ? lucas : Integer(lucas - 2);
}

namespace {

// Dense ascending coefficients of a polynomial with lowest exponent 0.
std::vector<Integer> dense(const LaurentPolynomial& p) {
  std::vector<Integer> out(static_cast<std::size_t>(p.max_exponent() + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c;
  return out;
}

}  // namespace

std::optional<Periodicity> detect_period(const LaurentPolynomial& p, std::uint64_t max_m) {
  if (p.is_zero()) throw InvalidArgument("period of the zero polynomial");
  Integer content = p.content();
  if (p.terms().rbegin()->second < 0) content = -content;

  LaurentPolynomial::Terms primitive;
  for (const auto& [e, c] : p.terms()) primitive[e - p.min_exponent()] = c / content;
  const auto coeffs = dense(LaurentPolynomial(primitive));
  const std::size_t degree = coeffs.size() - 1;

  // A primitive divisor of the monic t^m - 1 is monic with unit constant term.
  if (coeffs.back() != 1 || abs(coeffs.front()) != 1) return std::nullopt;
  if (degree == 0) return Periodicity{content, 1};

  // residue = t^m mod p0, kept at length `degree`.
  std::vector<Integer> residue(degree);
  residue[0] = 1;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    Integer carry = residue[degree - 1];
    for (std::size_t i = degree - 1; i > 0; --i) residue[i] = residue[i - 1];
    residue[0] = 0;
    if (carry != 0) {
      // t^degree = -(c_0 + ... + c_{degree-1} t^{degree-1}) mod the monic p0.
      for (std::size_t i = 0; i < degree; ++i) residue[i] -= carry * coeffs[i];
    }
    bool is_one = residue[0] == 1;
    for (std::size_t i = 1; is_one && i < degree; ++i) is_one = residue[i] == 0;
    if (is_one) return Periodicity{content, m};
  }
  return std::nullopt;
}

}  // namespace bitwist::abelian
