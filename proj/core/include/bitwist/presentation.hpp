#pragma once

// Words, finite and cyclic presentations, and the relators of the n-fold
// branched cyclic cover read off the bi-twist face pairing.

#include <cstdint>
#include <string>
#include <vector>

#include "bitwist/cfrac.hpp"

namespace bitwist {

struct Letter {
  std::uint32_t gen = 0;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of generators and inverses. Not reduced unless asked.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  Word inverse() const;
  /// w^e for any integer e; negative powers are powers of the inverse.
  Word power(std::int64_t e) const;

  Word freely_reduced() const;
  /// Freely reduced, then stripped of inverse pairs at the two ends.
  Word cyclically_reduced() const;

  /// Largest generator id + 1, or 0 for the empty word.
  std::uint32_t generator_bound() const;

  /// "x3 X1 x0": lowercase for +1, uppercase for -1; "" for the empty word.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "1" for the empty word.
  static Word parse(const std::string& text);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct FinitePresentation {
  std::uint32_t generator_count = 0;
  std::vector<Word> relators;

  /// Throws InvalidArgument if a relator mentions a generator >= generator_count.
  void validate() const;
};

/// <x_0..x_{n-1} | W, phi(W), ..., phi^{n-1}(W)>, phi: x_i -> x_{i+1 mod n}.
struct CyclicPresentation {
  std::uint32_t n = 1;
  Word defining_word;

  FinitePresentation expand() const;
};

namespace presentation {

/// Replaces every generator id g by (g + j) mod n.
Word shift(const Word& w, std::uint32_t n, std::int64_t j);

/// Generator id of x(i, j) for 0 <= i <= k, 1 <= j <= n (j taken mod n).
std::uint32_t generator_id(std::size_t i, std::int64_t j, std::uint32_t n);

/// Face relators R(i, j) of the n-fold cover, ordered i-major, j = 1..n.
/// Letters follow the displayed block products, unreduced.
FinitePresentation branched_cover_relators(const MultiplierFunction& mf, std::uint32_t n);

/// Solves R(i-1, j) for x(i, j) for i = 1..k and substitutes, leaving the
/// cyclic presentation on x(0, 1..n) defined by the rewritten R(k, 1).
/// Throws MalformedInput if pres does not have the expected shape.
CyclicPresentation eliminate_to_cyclic(const FinitePresentation& pres,
                                       const MultiplierFunction& mf, std::uint32_t n);

/// x_0 x_1 x_2^{-1} over r generators.
CyclicPresentation fibonacci_presentation(std::uint32_t r);

/// x_0^{-1} x_{n-1} x_1 over n generators, i.e. x_i = x_{i-1} x_{i+1}.
CyclicPresentation sieradski_presentation(std::uint32_t n);

}  // namespace presentation
}  // namespace bitwist
