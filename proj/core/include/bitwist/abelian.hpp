#pragma once

// First homology of branched cyclic covers through exponent-sum polynomials
// and circulant relator matrices.

#include <cstdint>
#include <optional>

#include "bitwist/cfrac.hpp"
#include "bitwist/laurent.hpp"
#include "bitwist/matrix.hpp"
#include "bitwist/presentation.hpp"

namespace bitwist {

/// p = content * p0, p0 primitive with positive leading coefficient and
/// p0 | t^period - 1 for the least such period.
struct Periodicity {
  Integer content;
  std::uint64_t period = 0;

  friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

namespace abelian {

/// Coefficient of t^g is the net exponent of generator g in the defining word.
LaurentPolynomial exponent_polynomial_from_word(const CyclicPresentation& cp);

/// Q_i(t) = m_i t - (l_i + l_{i+1} + 2 m_i) + m_i t^{-1} for i < k and
/// Q_k(t) = m_k t - (l_k + 2 m_k) + m_k t^{-1}.
LaurentPolynomial q_polynomial(const MultiplierFunction& mf, std::size_t i);

/// Numerator of Q_0 - 1/(Q_1 - 1/(... - 1/Q_k)) via N_i = Q_i N_{i+1} - N_{i+2},
/// unit-normalized.
LaurentPolynomial exponent_polynomial_via_Q(const MultiplierFunction& mf);

/// Exponents reduced into 0..n-1, coefficients summed.
LaurentPolynomial fold_mod_n(const LaurentPolynomial& p, std::uint32_t n);

/// True iff p = +-t^s q in Z[t]/(t^n - 1) for some s.
bool equal_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q, std::uint32_t n);

/// n x n matrix whose row j holds the coefficients of fold_mod_n(p t^j, n).
IntMatrix circulant(const LaurentPolynomial& p, std::uint32_t n);

/// Relators as rows, generators as columns, entries net exponents.
IntMatrix exponent_matrix(const FinitePresentation& pres);

AbelianInvariants abelianization(const FinitePresentation& pres);

/// H_1 of the n-fold branched cover from the Q-polynomial circulant.
AbelianInvariants homology(const MultiplierFunction& mf, std::uint32_t n);

/// Same group through face relators, generator elimination and the folded
/// defining word.
AbelianInvariants homology_via_presentation(const MultiplierFunction& mf, std::uint32_t n);

/// Order of the abelianized Fibonacci group F(n): L_n for odd n, L_n - 2 for
/// even n, with L_n = f_{n-1} + f_{n+1}. Zero would encode an infinite group.
Integer fibonacci_order(std::uint32_t n);

/// Least period m <= max_m with p0 | t^m - 1, or nullopt. p must be non-zero.
std::optional<Periodicity> detect_period(const LaurentPolynomial& p, std::uint64_t max_m);

}  // namespace abelian
}  // namespace bitwist
