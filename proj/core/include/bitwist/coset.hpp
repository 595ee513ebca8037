#pragma once

// Todd-Coxeter enumeration of the cosets of the trivial subgroup.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "bitwist/presentation.hpp"

namespace bitwist {

/// Closed coset table: row c, column 2g is the image of coset c under x_g and
/// column 2g + 1 its image under x_g^{-1}. Coset 0 is the trivial subgroup.
class CosetTable {
 public:
  CosetTable(std::uint32_t generator_count, std::vector<std::uint32_t> entries);

  std::size_t size() const { return generators_ == 0 ? 1 : entries_.size() / columns(); }
  std::uint32_t generator_count() const { return generators_; }
  std::size_t columns() const { return 2 * static_cast<std::size_t>(generators_); }

  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return entries_[coset * columns() + 2 * l.gen + (l.exp > 0 ? 0 : 1)];
  }
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  /// Every column is a permutation, inverse columns invert each other, and
  /// every relator traces every coset back to itself.
  bool is_consistent_with(const FinitePresentation& pres) const;

 private:
  std::uint32_t generators_;
  std::vector<std::uint32_t> entries_;
};

namespace coset {

struct Exceeded {
  std::size_t max_cosets = 0;
};

struct Enumerated {
  std::size_t order = 0;
  CosetTable table;
};

/// Order of the group, or Exceeded when more than max_cosets live cosets
/// would be needed. Exceeded is inconclusive, not a proof of infiniteness.
using EnumerationResult = std::variant<Enumerated, Exceeded>;

EnumerationResult enumerate(const FinitePresentation& pres, std::size_t max_cosets);

struct OrderClaim {
  std::string label;
  FinitePresentation presentation;
  std::size_t expected_order = 0;
};

enum class ClaimStatus { kPass, kFail, kExceeded };

struct ClaimOutcome {
  std::string label;
  std::size_t expected_order = 0;
  ClaimStatus status = ClaimStatus::kFail;
  std::size_t found_order = 0;  // 0 when exceeded
};

std::vector<ClaimOutcome> verify_order_claims(const std::vector<OrderClaim>& claims,
                                              std::size_t max_cosets);

std::string to_string(ClaimStatus status);

}  // namespace coset
}  // namespace bitwist
