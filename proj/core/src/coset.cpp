#include "bitwist/coset.hpp"

#include <limits>

#include "bitwist/errors.hpp"

namespace bitwist {

CosetTable::CosetTable(std::uint32_t generator_count, std::vector<std::uint32_t> entries)
    : generators_(generator_count), entries_(std::move(entries)) {
  if (generators_ != 0 && entries_.size() % columns() != 0) throw InvalidArgument("ragged coset table");
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (const Letter& l : w.letters()) coset = act(coset, l);
  return coset;
}

bool CosetTable::is_consistent_with(const FinitePresentation& pres) const {
  if (pres.generator_count != generators_) return false;
  const std::size_t n = size();
  for (std::uint32_t c = 0; c < n; ++c) {
    for (std::uint32_t g = 0; g < generators_; ++g) {
      const std::uint32_t forward = act(c, {g, 1});
      if (forward >= n || act(forward, {g, -1}) != c) return false;
    }
  }
  for (const Word& r : pres.relators) {
    for (std::uint32_t c = 0; c < n; ++c) {
      if (trace(c, r) != c) return false;
    }
  }
  return true;
}

namespace coset {
namespace {

constexpr std::uint32_t kUndefined = std::numeric_limits<std::uint32_t>::max();

// HLT enumeration with Holt-style coincidence processing over a union-find
// forest. Dead rows are never reused.
class Enumerator {
 public:
  Enumerator(const FinitePresentation& pres, std::size_t max_cosets)
      : columns_(2 * static_cast<std::size_t>(pres.generator_count)),
        max_live_(max_cosets),
        row_cap_(std::max<std::size_t>(max_cosets, 1) * 64) {
    for (const Word& w : pres.relators) {
      const Word reduced = w.cyclically_reduced();
      if (reduced.empty()) continue;
      std::vector<std::size_t> cols;
      for (const Letter& l : reduced.letters()) cols.push_back(column(l));
      relators_.push_back(std::move(cols));
    }
    new_row();
    live_ = 1;
  }

  bool run() {
    for (std::uint32_t c = 0; c < rows_; ++c) {
      if (!is_live(c)) continue;
      for (const auto& rel : relators_) {
        if (!scan_and_fill(c, rel)) return false;
        if (!is_live(c)) break;
      }
      if (!is_live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        if (at(c, x) == kUndefined && !define(c, x)) return false;
      }
    }
    return true;
  }

  std::size_t live() const { return live_; }

  // Live cosets renumbered in order of first definition.
  std::vector<std::uint32_t> compact_table() const {
    std::vector<std::uint32_t> renumber(rows_, kUndefined);
    std::uint32_t next = 0;
    for (std::uint32_t c = 0; c < rows_; ++c) {
      if (is_live(c)) renumber[c] = next++;
    }
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(next) * columns_);
    for (std::uint32_t c = 0; c < rows_; ++c) {
      if (!is_live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) out.push_back(renumber[at(c, x)]);
    }
    return out;
  }

 private:
  static std::size_t column(Letter l) { return 2 * static_cast<std::size_t>(l.gen) + (l.exp > 0 ? 0 : 1); }
  static std::size_t inverse(std::size_t x) { return x ^ 1U; }

  std::uint32_t& at(std::uint32_t c, std::size_t x) { return table_[c * columns_ + x]; }
  std::uint32_t at(std::uint32_t c, std::size_t x) const { return table_[c * columns_ + x]; }
  bool is_live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_row() {
    table_.resize(table_.size() + columns_, kUndefined);
    parent_.push_back(rows_);
    return rows_++;
  }

  bool define(std::uint32_t c, std::size_t x) {
    if (live_ >= max_live_ || rows_ >= row_cap_) return false;
    const std::uint32_t d = new_row();
    ++live_;
    at(c, x) = d;
    at(d, inverse(x)) = c;
    return true;
  }

  bool scan_and_fill(std::uint32_t c, const std::vector<std::size_t>& rel) {
    std::uint32_t f = c;
    std::uint32_t b = c;
    std::size_t i = 0;
    std::size_t j = rel.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && at(f, rel[i]) != kUndefined) f = at(f, rel[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && at(b, inverse(rel[j - 1])) != kUndefined) b = at(b, inverse(rel[--j]));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        at(f, rel[i]) = b;
        at(b, inverse(rel[i])) = f;
        return true;
      }
      if (!define(f, rel[i])) return false;
    }
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::uint32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const std::uint32_t keep = std::min(a, b);
    const std::uint32_t drop = std::max(a, b);
    parent_[drop] = keep;
    --live_;
    queue_.push_back(drop);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const std::uint32_t dead = queue_[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        const std::uint32_t target = at(dead, x);
        if (target == kUndefined) continue;
        at(target, inverse(x)) = kUndefined;
        const std::uint32_t mu = rep(dead);
        const std::uint32_t nu = rep(target);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse(x)) != kUndefined) {
          merge(mu, at(nu, inverse(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inverse(x)) = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_live_;
  std::size_t row_cap_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t rows_ = 0;
  std::size_t live_ = 0;
};

}  // namespace

EnumerationResult enumerate(const FinitePresentation& pres, std::size_t max_cosets) {
  if (max_cosets == 0) throw InvalidArgument("max_cosets must be positive");
  pres.validate();
  if (pres.generator_count == 0) return Enumerated{1, CosetTable(0, {})};
  Enumerator e(pres, max_cosets);
  if (!e.run()) return Exceeded{max_cosets};
  return Enumerated{e.live(), CosetTable(pres.generator_count, e.compact_table())};
}

std::vector<ClaimOutcome> verify_order_claims(const std::vector<OrderClaim>& claims,
                                              std::size_t max_cosets) {
  std::vector<ClaimOutcome> out;
  out.reserve(claims.size());
  for (const OrderClaim& claim : claims) {
    ClaimOutcome outcome{claim.label, claim.expected_order, ClaimStatus::kExceeded, 0};
    const auto result = enumerate(claim.presentation, max_cosets);
    if (const auto* done = std::get_if<Enumerated>(&result)) {
      outcome.found_order = done->order;
      outcome.status = done->order == claim.expected_order ? ClaimStatus::kPass : ClaimStatus::kFail;
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kExceeded:
      return "exceeded";
  }
  return "unknown";
}

}  // namespace coset
}  // namespace bitwist
