#include <gtest/gtest.h>

#include <random>

#include "bitwist/abelian.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/presentation.hpp"

using namespace bitwist;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

std::int64_t exponent_sum(const Word& w) {
  std::int64_t s = 0;
  for (const Letter& l : w.letters()) s += l.exp;
  return s;
}

std::vector<MultiplierFunction> all_multipliers(std::size_t max_levels, std::int64_t bound) {
  std::vector<MultiplierFunction> out;
  for (std::size_t levels = 1; levels <= max_levels; ++levels) {
    std::vector<int> lat(levels, 1);
    std::vector<std::int64_t> lon(levels, -bound);
    for (;;) {
      out.emplace_back(lat, lon);
      std::size_t i = 0;
      for (; i < levels; ++i) {
        if (lat[i] == 1) {
          lat[i] = -1;
          break;
        }
        lat[i] = 1;
        if (lon[i] < bound) {
          ++lon[i];
          break;
        }
        lon[i] = -bound;
      }
      if (i == levels) break;
    }
  }
  return out;
}

}  // namespace

TEST(Word, ParsePrintAndReduce) {
  const Word w = W("x3 X1 x0");
  EXPECT_EQ(w.to_string(), "x3 X1 x0");
  EXPECT_EQ(W("x0 x1 X1 X0 x2").freely_reduced(), W("x2"));
  EXPECT_EQ(W("X2 x0 x1 x2").cyclically_reduced(), W("x0 x1"));
  EXPECT_EQ(W("1"), Word());
  EXPECT_EQ(Word().to_string(), "1");
  EXPECT_EQ(W("x0 x1").inverse(), W("X1 X0"));
  EXPECT_EQ(W("x0 X1").power(-2), W("x1 X0 x1 X0"));
  EXPECT_EQ(W("x0").power(0), Word());
  EXPECT_THROW(W("y0"), InvalidArgument);
}

TEST(Word, FreeReductionIsIdempotentAndShortening) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint32_t> gen(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w;
    for (int i = 0; i < trial % 20; ++i) w.push({gen(rng), sign(rng) ? 1 : -1});
    const Word r = w.freely_reduced();
    EXPECT_EQ(r.freely_reduced(), r);
    EXPECT_LE(r.size(), w.size());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      EXPECT_FALSE(r.letters()[i].gen == r.letters()[i + 1].gen &&
                   r.letters()[i].exp == -r.letters()[i + 1].exp);
    }
  }
}

TEST(Shift, DefinitionPeriodicityComposition) {
  EXPECT_EQ(presentation::shift(W("x0 x1"), 3, 1), W("x1 x2"));
  const Word w = W("x0 X2 x1 x1");
  EXPECT_EQ(presentation::shift(w, 3, 3), w);
  EXPECT_EQ(presentation::shift(w, 3, -1), W("x2 X1 x0 x0"));
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      EXPECT_EQ(presentation::shift(presentation::shift(w, 3, a), 3, b),
                presentation::shift(w, 3, a + b));
    }
  }
}

TEST(CyclicPresentation, ExpandsToShifts) {
  const CyclicPresentation f5 = presentation::fibonacci_presentation(5);
  EXPECT_EQ(f5.defining_word, W("x0 x1 X2"));
  const FinitePresentation p = f5.expand();
  EXPECT_EQ(p.generator_count, 5U);
  ASSERT_EQ(p.relators.size(), 5U);
  EXPECT_EQ(p.relators[3], W("x3 x4 X0"));
  EXPECT_EQ(p.relators[4], W("x4 x0 X1"));
}

TEST(Fibonacci, DegenerateRankOne) {
  EXPECT_EQ(presentation::fibonacci_presentation(1).defining_word.freely_reduced(), W("x0"));
}

TEST(Sieradski, Words) {
  EXPECT_EQ(presentation::sieradski_presentation(3).defining_word, W("X0 x2 x1"));
  // n = 1: x0^{-1} x0 x0 reduces to a single generator.
  EXPECT_EQ(presentation::sieradski_presentation(1).defining_word.freely_reduced(), W("x0"));
}

TEST(BranchedCover, FigureEightDegreeOne) {
  const auto pres = presentation::branched_cover_relators(MultiplierFunction({1}, {1}), 1);
  EXPECT_EQ(pres.generator_count, 1U);
  ASSERT_EQ(pres.relators.size(), 1U);
  EXPECT_EQ(exponent_sum(pres.relators[0]), 1);
  EXPECT_EQ(pres.relators[0].freely_reduced(), W("x0"));
}

TEST(BranchedCover, RelatorsTouchOnlyAdjacentRows) {
  const std::uint32_t n = 3;
  const auto pres = presentation::branched_cover_relators(MultiplierFunction({1, -1}, {1, 2}), n);
  EXPECT_EQ(pres.generator_count, 6U);
  ASSERT_EQ(pres.relators.size(), 6U);
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    const std::size_t row = r / n;
    for (const Letter& l : pres.relators[r].letters()) {
      const std::size_t lrow = l.gen / n;
      EXPECT_LE(lrow, row + 1);
      EXPECT_GE(lrow + 1, row);
    }
  }
}

TEST(BranchedCover, DegreeOneGivesOneRelatorPerLevel) {
  const MultiplierFunction mf({1, -1, 1}, {2, 0, -1});
  const auto pres = presentation::branched_cover_relators(mf, 1);
  EXPECT_EQ(pres.relators.size(), 3U);
  EXPECT_EQ(pres.generator_count, 3U);
}

TEST(BranchedCover, GeneratorNumbering) {
  EXPECT_EQ(presentation::generator_id(0, 1, 4), 0U);
  EXPECT_EQ(presentation::generator_id(2, 3, 4), 10U);
  EXPECT_EQ(presentation::generator_id(1, 5, 4), 4U);
  EXPECT_EQ(presentation::generator_id(1, 0, 4), 7U);
}

TEST(Eliminate, SingleLevelIsAlreadyCyclic) {
  const MultiplierFunction mf({-1}, {1});
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto pres = presentation::branched_cover_relators(mf, n);
    const auto cyc = presentation::eliminate_to_cyclic(pres, mf, n);
    EXPECT_EQ(cyc.n, n);
    EXPECT_EQ(cyc.defining_word, pres.relators[0].cyclically_reduced());
  }
}

TEST(Eliminate, TrefoilWordPolynomial) {
  const MultiplierFunction mf({-1}, {1});
  const LaurentPolynomial target(LaurentPolynomial::Terms{{0, 1}, {1, -1}, {2, 1}});
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const auto cyc = presentation::eliminate_to_cyclic(
        presentation::branched_cover_relators(mf, n), mf, n);
    EXPECT_TRUE(abelian::equal_up_to_unit(abelian::exponent_polynomial_from_word(cyc), target, n));
  }
}

TEST(Eliminate, FigureEightWordPolynomial) {
  // The n-generator cover presentation has polynomial 1 - 3t + t^2; the
  // polynomial 1 + t - t^2 belongs to F(2n) on 2n generators. Substituting
  // t -> t^2 into (1 + s - s^2)(1 - s - s^2) recovers 1 - 3t + t^2.
  const MultiplierFunction mf({1}, {1});
  const LaurentPolynomial target(LaurentPolynomial::Terms{{0, 1}, {1, -3}, {2, 1}});
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const auto cyc = presentation::eliminate_to_cyclic(
        presentation::branched_cover_relators(mf, n), mf, n);
    EXPECT_TRUE(abelian::equal_up_to_unit(abelian::exponent_polynomial_from_word(cyc), target, n));
  }
}

TEST(Eliminate, AgreesWithQPolynomialUpToUnit) {
  for (const auto& mf : all_multipliers(4, 2)) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const auto cyc = presentation::eliminate_to_cyclic(
          presentation::branched_cover_relators(mf, n), mf, n);
      ASSERT_TRUE(abelian::equal_up_to_unit(abelian::exponent_polynomial_from_word(cyc),
                                            abelian::exponent_polynomial_via_Q(mf), n))
          << mf.to_string() << " n=" << n;
    }
  }
}

TEST(Eliminate, PreservesAbelianization) {
  for (const auto& mf : all_multipliers(3, 2)) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const auto pres = presentation::branched_cover_relators(mf, n);
      const auto cyc = presentation::eliminate_to_cyclic(pres, mf, n);
      ASSERT_EQ(abelian::abelianization(cyc.expand()), abelian::abelianization(pres))
          << mf.to_string() << " n=" << n;
    }
  }
}

TEST(Eliminate, FigureEightCoversMatchEvenFibonacciGroups) {
  const MultiplierFunction mf({1}, {1});
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto cyc = presentation::eliminate_to_cyclic(
        presentation::branched_cover_relators(mf, n), mf, n);
    EXPECT_EQ(abelian::abelianization(cyc.expand()),
              abelian::abelianization(presentation::fibonacci_presentation(2 * n).expand()))
        << "n=" << n;
  }
}

TEST(Eliminate, TrefoilCoversMatchSieradskiGroups) {
  const MultiplierFunction mf({-1}, {1});
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto cyc = presentation::eliminate_to_cyclic(
        presentation::branched_cover_relators(mf, n), mf, n);
    EXPECT_EQ(abelian::abelianization(cyc.expand()),
              abelian::abelianization(presentation::sieradski_presentation(n).expand()))
        << "n=" << n;
  }
}

TEST(Eliminate, RejectsMismatchedPresentation) {
  const MultiplierFunction mf({1, 1}, {1, 1});
  const auto pres = presentation::branched_cover_relators(MultiplierFunction({1}, {1}), 3);
  EXPECT_THROW(presentation::eliminate_to_cyclic(pres, mf, 3), MalformedInput);
}
