#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bitwist/cfrac.hpp"
#include "bitwist/errors.hpp"
#include "oracles.hpp"

using namespace bitwist;

namespace {

ProjectiveFraction F(long p, long q) { return ProjectiveFraction(p, q); }

ProjectiveFraction eval(const std::vector<long>& terms) {
  return cfrac::eval_cf(std::span<const long>(terms));
}

ProjectiveFraction from_q(const mpq_class& q) {
  return ProjectiveFraction(q.get_num(), q.get_den());
}

}  // namespace

TEST(ProjectiveFraction, CanonicalSignAndInfinity) {
  EXPECT_EQ(F(3, -6), F(-1, 2));
  EXPECT_EQ(F(-3, 0), ProjectiveFraction::infinity());
  EXPECT_EQ(F(0, -5), F(0, 1));
  EXPECT_EQ(F(-1, 2).den(), 2);
  EXPECT_THROW(F(0, 0), InvalidArgument);
}

TEST(ProjectiveFraction, ParseAndPrint) {
  EXPECT_EQ(ProjectiveFraction::parse("-3/2"), F(-3, 2));
  EXPECT_EQ(ProjectiveFraction::parse("5"), F(5, 1));
  EXPECT_EQ(ProjectiveFraction::parse("inf"), ProjectiveFraction::infinity());
  EXPECT_EQ(F(10, 4).to_string(), "5/2");
  EXPECT_EQ(F(4, 1).to_string(), "4/1");
  EXPECT_THROW(ProjectiveFraction::parse("3/x"), InvalidArgument);
}

TEST(MultiplierFunction, RejectsBadShapes) {
  EXPECT_THROW(MultiplierFunction({2}, {1}), InvalidArgument);
  EXPECT_THROW(MultiplierFunction({1, 1}, {1}), InvalidArgument);
  EXPECT_THROW(MultiplierFunction({}, {}), InvalidArgument);
  EXPECT_EQ(MultiplierFunction({-1, 1}, {1, 0}).to_string(), "-1,1;1,0");
}

TEST(EvalCf, Examples) {
  EXPECT_EQ(eval({-2, 2}), F(-3, 2));
  EXPECT_EQ(eval({2, 0, 2}), F(4, 1));
  EXPECT_EQ(eval({5}), F(5, 1));
}

TEST(EvalCf, FoldingIdentitiesHoldProjectively) {
  // x + 1/(0 + 1/y) = x + y and x + 1/(y + 1/0) = x.
  for (long x = -4; x <= 4; ++x) {
    for (long y = -4; y <= 4; ++y) {
      EXPECT_EQ(eval({x, 0, y}), F(x + y, 1));
      EXPECT_EQ(cfrac::eval_cf(std::vector<Integer>{x, y, 0}), F(x, 1)) << x << " " << y;
    }
  }
}

TEST(EvalCf, AgreesWithRationalOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> term(-6, 6);
  std::uniform_int_distribution<int> len(1, 9);
  int compared = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<long> terms(static_cast<std::size_t>(len(rng)));
    for (long& t : terms) t = term(rng);
    const auto expected = oracle::nested_fraction(terms);
    if (!expected) continue;
    EXPECT_EQ(eval(terms), from_q(*expected));
    ++compared;
  }
  EXPECT_GT(compared, 2000);
}

TEST(EvalCf, NegatingTermsNegatesValue) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> term(-9, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<long> terms(1 + trial % 8);
    for (long& t : terms) t = term(rng);
    std::vector<long> negated(terms);
    for (long& t : negated) t = -t;
    EXPECT_EQ(eval(negated), -eval(terms));
  }
}

TEST(Invariant, TrefoilAndFigureEight) {
  EXPECT_EQ(cfrac::invariant_of_multipliers(MultiplierFunction({-1}, {1})), F(-3, 2));
  EXPECT_EQ(cfrac::invariant_of_multipliers(MultiplierFunction({1}, {1})), F(5, 2));
}

TEST(Invariant, ZeroLongitudinalEntry) {
  // Oracle: 2 + 1/(0 + 1/(2 + 1/2)) evaluated over Q is 9/2.
  const auto oracle_value = oracle::nested_fraction({2, 0, 2, 2});
  ASSERT_TRUE(oracle_value);
  EXPECT_EQ(from_q(*oracle_value), F(9, 2));
  const MultiplierFunction mf({1, 1}, {0, 1});
  EXPECT_EQ(cfrac::multiplier_terms(mf), (std::vector<Integer>{2, 0, 2, 2}));
  EXPECT_EQ(cfrac::invariant_of_multipliers(mf), F(9, 2));
}

TEST(Normalized, Examples) {
  EXPECT_TRUE(cfrac::is_normalized(MultiplierFunction({1}, {1})));
  EXPECT_TRUE(cfrac::is_normalized(MultiplierFunction({1, 1}, {0, 1})));
  // m_5 = 0 while l_5 = -l_6.
  const MultiplierFunction twisted({1, 1, 1, -1, -1, -1, 1}, {2, 0, -3, 2, 0, 0, 3});
  EXPECT_FALSE(cfrac::is_normalized(twisted));
  EXPECT_FALSE(cfrac::is_normalized(MultiplierFunction({1, 1}, {1, 0})));
}

TEST(Mirror, NegatesEverythingAndIsAnInvolution) {
  const MultiplierFunction fig8({1}, {1});
  EXPECT_EQ(cfrac::mirror(fig8), MultiplierFunction({-1}, {-1}));
  EXPECT_EQ(cfrac::invariant_of_multipliers(cfrac::mirror(fig8)), F(-5, 2));
  const MultiplierFunction mf({1, -1, 1}, {2, 0, -3});
  EXPECT_EQ(cfrac::mirror(cfrac::mirror(mf)), mf);
}

TEST(EvenExpansion, Examples) {
  EXPECT_EQ(cfrac::even_cf_expansion(F(5, 2)).terms, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(cfrac::even_cf_expansion(F(-3, 2)).terms, (std::vector<Integer>{-2, 2}));
  EXPECT_EQ(cfrac::even_cf_expansion(F(1, 2)).terms, (std::vector<Integer>{0, 2}));
  EXPECT_THROW(cfrac::even_cf_expansion(F(3, 5)), NotExpandable);
  EXPECT_THROW(cfrac::even_cf_expansion(F(4, 3)), NotExpandable);
  EXPECT_THROW(cfrac::even_cf_expansion(ProjectiveFraction::infinity()), NotExpandable);
}

TEST(EvenExpansion, RoundTripOverSmallFractions) {
  for (long p = -99; p <= 99; p += 2) {
    for (long q = 2; q <= 200; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const auto cf = cfrac::even_cf_expansion(F(p, q));
      ASSERT_EQ(cf.terms.size() % 2, 0U) << p << "/" << q;
      ASSERT_NE(cf.terms.back(), 0) << p << "/" << q;
      for (const Integer& t : cf.terms) ASSERT_TRUE(mpz_even_p(t.get_mpz_t()));
      ASSERT_EQ(cfrac::eval_cf(std::span<const Integer>(cf.terms)), F(p, q));
    }
  }
}

TEST(RealizeKnot, Examples) {
  EXPECT_EQ(cfrac::realize_knot(F(3, 2)).size(), 1U);
  const auto five_halves = cfrac::realize_knot(F(5, 2));
  ASSERT_EQ(five_halves.size(), 2U);
  for (const auto& mf : five_halves) {
    EXPECT_TRUE(cfrac::is_normalized(mf));
    EXPECT_TRUE(cfrac::knots_equivalent(cfrac::invariant_of_multipliers(mf), F(5, 2), false))
        << mf.to_string();
  }
  EXPECT_THROW(cfrac::realize_knot(F(4, 3)), NotAKnot);
  EXPECT_THROW(cfrac::realize_knot(F(1, 2)), InvalidArgument);
}

TEST(RealizeKnot, TrefoilRealizationIsTheTrefoilData) {
  EXPECT_EQ(cfrac::realize_knot(F(-3, 2)), (std::vector<MultiplierFunction>{MultiplierFunction({-1}, {1})}));
}

TEST(KnotsEquivalent, Examples) {
  EXPECT_TRUE(cfrac::knots_equivalent(F(5, 2), F(5, 3), false));
  EXPECT_FALSE(cfrac::knots_equivalent(F(3, 2), F(-3, 2), false));
  EXPECT_TRUE(cfrac::knots_equivalent(F(3, 2), F(-3, 2), true));
  EXPECT_TRUE(cfrac::knots_equivalent(F(7, 3), F(7, 3), false));
  EXPECT_FALSE(cfrac::knots_equivalent(F(7, 3), F(5, 3), true));
}

TEST(Properties, RealizeRoundTripOnNormalizedFunctions) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> levels(1, 4), sign(0, 1);
  std::uniform_int_distribution<std::int64_t> m(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<int> lat(static_cast<std::size_t>(levels(rng)));
    std::vector<std::int64_t> lon(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      lat[i] = sign(rng) ? 1 : -1;
      lon[i] = m(rng);
    }
    const MultiplierFunction mf(lat, lon);
    if (!cfrac::is_normalized(mf)) continue;
    const ProjectiveFraction x = cfrac::invariant_of_multipliers(mf);
    if (abs(x.num()) < 3) continue;
    const auto realizations = cfrac::realize_knot(x);
    const bool found = std::any_of(realizations.begin(), realizations.end(), [&](const auto& r) {
      return cfrac::knots_equivalent(cfrac::invariant_of_multipliers(r), x, false);
    });
    EXPECT_TRUE(found) << mf.to_string();
    EXPECT_NE(std::find(realizations.begin(), realizations.end(), mf), realizations.end())
        << mf.to_string() << " is not among the realizations of " << x.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Properties, ParityOfNormalizedInvariants) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> levels(1, 6), sign(0, 1);
  std::uniform_int_distribution<std::int64_t> m(-4, 4);
  int checked = 0;
  while (checked < 500) {
    std::vector<int> lat(static_cast<std::size_t>(levels(rng)));
    std::vector<std::int64_t> lon(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      lat[i] = sign(rng) ? 1 : -1;
      lon[i] = m(rng);
    }
    const MultiplierFunction mf(lat, lon);
    if (!cfrac::is_normalized(mf)) continue;
    const ProjectiveFraction x = cfrac::invariant_of_multipliers(mf);
    ASSERT_FALSE(x.is_infinite()) << mf.to_string();
    EXPECT_TRUE(mpz_odd_p(x.num().get_mpz_t())) << mf.to_string() << " -> " << x.to_string();
    EXPECT_TRUE(mpz_even_p(x.den().get_mpz_t())) << mf.to_string() << " -> " << x.to_string();
    ++checked;
  }
}
