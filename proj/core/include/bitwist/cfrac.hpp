#pragma once

// Continued fractions and the two-bridge knot attached to a set of bi-twist
// multipliers.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bitwist {

using Integer = mpz_class;

/// Bi-twist multipliers: latitudinal l_0..l_k (each +1 or -1) interleaved
/// with longitudinal m_0..m_k (any integer, 0 meaning the edge collapses).
class MultiplierFunction {
 public:
  /// Throws InvalidArgument unless the lengths agree, are non-zero and every
  /// latitudinal entry is +1 or -1.
  MultiplierFunction(std::vector<int> lat, std::vector<std::int64_t> lon);

  const std::vector<int>& lat() const { return lat_; }
  const std::vector<std::int64_t>& lon() const { return lon_; }

  /// Index of the last level; there are k() + 1 levels.
  std::size_t k() const { return lat_.size() - 1; }
  std::size_t levels() const { return lat_.size(); }

  /// "l0,m0;l1,m1;..."
  std::string to_string() const;

  friend bool operator==(const MultiplierFunction&, const MultiplierFunction&) = default;
  friend auto operator<=>(const MultiplierFunction&, const MultiplierFunction&) = default;

 private:
  std::vector<int> lat_;
  std::vector<std::int64_t> lon_;
};

/// Reduced element of Q u {inf}. Canonical: gcd(|num|,|den|) = 1, den >= 0,
/// infinity stored as 1/0.
class ProjectiveFraction {
 public:
  ProjectiveFraction() : num_(0), den_(1) {}
  /// Reduces and canonicalizes; throws InvalidArgument on 0/0.
  ProjectiveFraction(Integer num, Integer den);
  ProjectiveFraction(long num) : num_(num), den_(1) {}  // NOLINT(implicit)

  static ProjectiveFraction infinity() { return ProjectiveFraction(1, 0); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  ProjectiveFraction operator-() const;
  /// 1/x, with 1/0 = inf and 1/inf = 0.
  ProjectiveFraction reciprocal() const;

  /// "a/b"; infinity prints as "1/0".
  std::string to_string() const;
  /// Accepts "a/b", "a" and "inf".
  static ProjectiveFraction parse(const std::string& text);

  friend bool operator==(const ProjectiveFraction& x, const ProjectiveFraction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

/// All-even continued fraction [2a_0, ..., 2a_{2t+1}] of even length.
struct EvenCF {
  std::vector<Integer> terms;
};

namespace cfrac {

/// a_0 + 1/(a_1 + 1/(... + 1/a_n)) by the projective matrix recurrence.
/// Zero terms are legal. Throws InvalidArgument on empty input.
ProjectiveFraction eval_cf(std::span<const Integer> terms);
ProjectiveFraction eval_cf(std::span<const long> terms);

/// [2 l_0, 2 m_0, 2 l_1, 2 m_1, ..., 2 l_k, 2 m_k]
std::vector<Integer> multiplier_terms(const MultiplierFunction& mf);

/// Rational invariant a/b of the tangle whose numerator closure is the knot.
ProjectiveFraction invariant_of_multipliers(const MultiplierFunction& mf);

/// m_k != 0, and m_i = 0 for i < k forces l_i = l_{i+1}.
bool is_normalized(const MultiplierFunction& mf);

/// Negates every multiplier; the invariant changes sign.
MultiplierFunction mirror(const MultiplierFunction& mf);

/// Modified Euclidean algorithm: at every step take the even quotient that
/// leaves a remainder smaller in magnitude than the divisor. Requires an odd
/// numerator and an even, non-zero denominator; throws NotExpandable
/// otherwise.
EvenCF even_cf_expansion(const ProjectiveFraction& x);

/// Rebuilds the normalized multipliers for an all-even CF with non-zero
/// terms after the first. A latitudinal term 2c with |c| > 1 becomes |c|
/// latitudinal entries of sign(c) joined by zero longitudinal entries.
/// Throws InvalidArgument if the CF has a zero latitudinal term.
MultiplierFunction multipliers_from_even_cf(const EvenCF& cf);

/// Normalized multiplier functions whose knot is the numerator closure of
/// T(a/b). One entry iff b^2 = 1 mod a, otherwise two. Sorted.
/// Throws NotAKnot for an even numerator and InvalidArgument if |a| < 3.
std::vector<MultiplierFunction> realize_knot(const ProjectiveFraction& x);

/// Schubert classification of the two-bridge knots N(T(a/b)):
/// |a_x| = |a_y| and b_y = e * b_x^{+-1} mod |a|, e = +1 or, with
/// include_mirror, e = +-1. Throws NotAKnot unless both numerators are odd.
bool knots_equivalent(const ProjectiveFraction& x, const ProjectiveFraction& y,
                      bool include_mirror);

}  // namespace cfrac
}  // namespace bitwist
