#include <gtest/gtest.h>

#include "bitwist/abelian.hpp"
#include "bitwist/coset.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/presentation.hpp"

using namespace bitwist;

namespace {

std::optional<std::size_t> order_of(const FinitePresentation& pres, std::size_t bound) {
  const auto result = coset::enumerate(pres, bound);
  if (const auto* done = std::get_if<coset::Enumerated>(&result)) {
    EXPECT_TRUE(done->table.is_consistent_with(pres));
    EXPECT_EQ(done->table.size(), done->order);
    return done->order;
  }
  return std::nullopt;
}

FinitePresentation parse(std::uint32_t gens, std::initializer_list<const char*> relators) {
  FinitePresentation p{gens, {}};
  for (const char* r : relators) p.relators.push_back(Word::parse(r));
  return p;
}

// Relabels generator g as perm[g].
FinitePresentation relabel(const FinitePresentation& pres, const std::vector<std::uint32_t>& perm) {
  FinitePresentation out{pres.generator_count, {}};
  for (const Word& w : pres.relators) {
    Word r;
    for (const Letter& l : w.letters()) r.push({perm[l.gen], l.exp});
    out.relators.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Coset, FibonacciAndSieradskiOrders) {
  EXPECT_EQ(order_of(presentation::fibonacci_presentation(5).expand(), 10000), 11U);
  EXPECT_EQ(order_of(presentation::fibonacci_presentation(4).expand(), 10000), 5U);
  EXPECT_EQ(order_of(presentation::fibonacci_presentation(3).expand(), 10000), 8U);
  EXPECT_EQ(order_of(presentation::fibonacci_presentation(7).expand(), 200000), 29U);
  EXPECT_EQ(order_of(presentation::sieradski_presentation(1).expand(), 10000), 1U);
  EXPECT_EQ(order_of(presentation::sieradski_presentation(2).expand(), 10000), 3U);
  EXPECT_EQ(order_of(presentation::sieradski_presentation(3).expand(), 10000), 8U);
}

TEST(Coset, InfiniteGroupExceedsBound) {
  EXPECT_FALSE(order_of(presentation::sieradski_presentation(6).expand(), 20000));
  EXPECT_FALSE(order_of(FinitePresentation{1, {}}, 50));
}

TEST(Coset, SmallClassicalGroups) {
  EXPECT_EQ(order_of(parse(1, {"x0 x0 x0 x0 x0 x0 x0"}), 100), 7U);
  // S3 = <a, b | a^2, b^3, (ab)^2>.
  EXPECT_EQ(order_of(parse(2, {"x0 x0", "x1 x1 x1", "x0 x1 x0 x1"}), 100), 6U);
  // A5 = <a, b | a^2, b^3, (ab)^5>.
  EXPECT_EQ(order_of(parse(2, {"x0 x0", "x1 x1 x1", "x0 x1 x0 x1 x0 x1 x0 x1 x0 x1"}), 1000), 60U);
  // Binary icosahedral group <s, t | (st)^2 = s^3 = t^5>; it is perfect.
  EXPECT_EQ(order_of(parse(2, {"x0 x1 x0 x1 X0 X0 X0", "x0 x0 x0 X1 X1 X1 X1 X1"}), 5000),
            120U);
}

TEST(Coset, TrivialPresentations) {
  EXPECT_EQ(order_of(FinitePresentation{0, {}}, 1), 1U);
  EXPECT_EQ(order_of(parse(2, {"x0", "x1"}), 1), 1U);
  EXPECT_THROW(coset::enumerate(FinitePresentation{1, {}}, 0), InvalidArgument);
}

TEST(Coset, OrderDivisibleByAbelianizationOrder) {
  const std::vector<FinitePresentation> groups = {
      presentation::fibonacci_presentation(5).expand(),
      presentation::fibonacci_presentation(3).expand(),
      presentation::sieradski_presentation(3).expand(),
      presentation::sieradski_presentation(4).expand(),
      parse(2, {"x0 x0", "x1 x1 x1", "x0 x1 x0 x1 x0 x1 x0 x1"})};
  for (const auto& pres : groups) {
    const auto order = order_of(pres, 100000);
    ASSERT_TRUE(order);
    const auto ab = abelian::abelianization(pres);
    ASSERT_EQ(ab.free_rank, 0U);
    EXPECT_EQ(*order % ab.order().get_ui(), 0U);
  }
  // F(5) is cyclic, so the order equals the abelianization order.
  EXPECT_EQ(abelian::abelianization(presentation::fibonacci_presentation(5).expand()).order(), 11);
}

TEST(Coset, OrderIndependentOfGeneratorLabels) {
  const FinitePresentation f5 = presentation::fibonacci_presentation(5).expand();
  const std::vector<std::vector<std::uint32_t>> perms = {
      {4, 3, 2, 1, 0}, {1, 2, 3, 4, 0}, {2, 0, 4, 1, 3}};
  for (const auto& perm : perms) EXPECT_EQ(order_of(relabel(f5, perm), 10000), 11U);
}

TEST(Coset, OrderIndependentOfSufficientBound) {
  const FinitePresentation q8 = presentation::sieradski_presentation(3).expand();
  for (std::size_t bound : {100, 1000, 100000}) EXPECT_EQ(order_of(q8, bound), 8U) << bound;
}

TEST(Coset, VerifyOrderClaims) {
  const auto outcomes = coset::verify_order_claims(
      {{"F(5)", presentation::fibonacci_presentation(5).expand(), 11},
       {"G2", presentation::sieradski_presentation(2).expand(), 3},
       {"G3", presentation::sieradski_presentation(3).expand(), 8},
       {"trivial", FinitePresentation{1, {Word::parse("x0")}}, 1},
       {"F(4)", presentation::fibonacci_presentation(4).expand(),
        abelian::fibonacci_order(4).get_ui()},
       {"wrong", presentation::fibonacci_presentation(5).expand(), 12},
       {"G6", presentation::sieradski_presentation(6).expand(), 1}},
      20000);
  ASSERT_EQ(outcomes.size(), 7U);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(outcomes[i].status, coset::ClaimStatus::kPass) << i;
  EXPECT_EQ(outcomes[5].status, coset::ClaimStatus::kFail);
  EXPECT_EQ(outcomes[5].found_order, 11U);
  EXPECT_EQ(outcomes[6].status, coset::ClaimStatus::kExceeded);
  EXPECT_EQ(coset::to_string(coset::ClaimStatus::kExceeded), "exceeded");
}
