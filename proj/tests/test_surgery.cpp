#include <gtest/gtest.h>

#include <random>

#include "bitwist/cfrac.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/surgery.hpp"

using namespace bitwist;

namespace {

ProjectiveFraction F(long p, long q) { return ProjectiveFraction(p, q); }

std::size_t zero_longitudes(const MultiplierFunction& mf) {
  return static_cast<std::size_t>(std::count(mf.lon().begin(), mf.lon().end(), 0));
}

MultiplierFunction random_multipliers(std::mt19937& rng, std::size_t max_levels, std::int64_t bound) {
  std::uniform_int_distribution<std::size_t> levels(1, max_levels);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<std::int64_t> m(-bound, bound);
  std::vector<int> lat(levels(rng));
  std::vector<std::int64_t> lon(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    lat[i] = sign(rng) ? 1 : -1;
    lon[i] = m(rng);
  }
  return MultiplierFunction(lat, lon);
}

}  // namespace

TEST(BuildChain, InitialCoefficients) {
  const ChainDiagram trefoil = surgery::build_chain(MultiplierFunction({-1}, {1}));
  ASSERT_EQ(trefoil.levels().size(), 1U);
  EXPECT_EQ(trefoil.levels()[0].o.coeff, F(0, 1));
  EXPECT_EQ(trefoil.levels()[0].l.coeff, F(-1, 1));
  EXPECT_EQ(trefoil.levels()[0].m.coeff, F(1, 1));

  const ChainDiagram two = surgery::build_chain(MultiplierFunction({1, 1}, {0, 1}));
  EXPECT_TRUE(two.levels()[0].m.coeff.is_infinite());
  EXPECT_EQ(two.levels()[1].m.coeff, F(1, 1));
  for (const auto& lv : two.levels()) {
    EXPECT_EQ(lv.o.coeff, F(0, 1));
    EXPECT_TRUE(lv.o.present && lv.l.present && lv.m.present);
  }
  EXPECT_EQ(surgery::build_chain(MultiplierFunction({1}, {-3})).levels()[0].m.coeff, F(-1, 3));
}

TEST(RolfsenTwist, Examples) {
  EXPECT_TRUE(surgery::rolfsen_twist(F(1, 1), -1).is_infinite());
  EXPECT_TRUE(surgery::rolfsen_twist(F(1, 2), -2).is_infinite());
  EXPECT_EQ(surgery::rolfsen_twist(F(0, 1), 3), F(0, 1));
  EXPECT_EQ(surgery::rolfsen_twist(F(2, 3), 1), F(2, 5));
  EXPECT_TRUE(surgery::rolfsen_twist(ProjectiveFraction::infinity(), 4).is_infinite());
}

TEST(Reduce, TrefoilTrace) {
  const Reduction r = surgery::reduce(surgery::build_chain(MultiplierFunction({-1}, {1})));
  EXPECT_EQ(r.trace.moves.size(), 3U);
  EXPECT_EQ(r.tangle.terms, (std::vector<Integer>{-2, 2}));
  EXPECT_TRUE(r.final_state.is_empty());
  EXPECT_EQ(surgery::closure_fraction(r.tangle), F(-3, 2));
  EXPECT_EQ(r.trace.moves[0].curve.to_string(), "M0");
  EXPECT_EQ(r.trace.moves[1].curve.to_string(), "L0");
  EXPECT_EQ(r.trace.moves[2].curve.to_string(), "O0");
}

TEST(Reduce, FigureEight) {
  const Reduction r = surgery::reduce(surgery::build_chain(MultiplierFunction({1}, {1})));
  const ProjectiveFraction cd = surgery::denominator_fraction(r.tangle);
  EXPECT_EQ(F(-cd.den().get_si(), cd.num().get_si()), F(5, 2));
  EXPECT_EQ(surgery::closure_fraction(r.tangle), F(5, 2));
}

TEST(Reduce, AllZeroLongitudesGiveTheUnknot) {
  for (std::size_t levels = 1; levels <= 4; ++levels) {
    const MultiplierFunction mf(std::vector<int>(levels, 1), std::vector<std::int64_t>(levels, 0));
    const Reduction r = surgery::reduce(surgery::build_chain(mf));
    EXPECT_TRUE(r.tangle.terms.empty());
    EXPECT_TRUE(r.final_state.is_empty());
    EXPECT_THROW(surgery::closure_fraction(r.tangle), DivisionUndefined);
    EXPECT_TRUE(cfrac::invariant_of_multipliers(mf).is_infinite());
  }
}

TEST(Reduce, TopLevelZeroLongitudeLeavesTangleUntouched) {
  // m_1 = 0: M_1 is removed and the L_1/O_1 pair cancels without axis effect.
  const MultiplierFunction mf({1, -1}, {2, 0});
  const Reduction r = surgery::reduce(surgery::build_chain(mf));
  ASSERT_GE(r.trace.moves.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_FALSE(r.trace.moves[i].tangle_delta) << i;
  EXPECT_EQ(r.trace.moves[0].kind, Move::Kind::kRemove);
  EXPECT_EQ(r.tangle.terms, (std::vector<Integer>{-4, -2}));
  EXPECT_EQ(surgery::closure_fraction(r.tangle), cfrac::invariant_of_multipliers(mf));
}

TEST(Reduce, InteriorZeroLongitudeRecordsZeroTerm) {
  const MultiplierFunction mf({1, 1}, {0, 1});
  const Reduction r = surgery::reduce(surgery::build_chain(mf));
  EXPECT_EQ(r.tangle.terms, (std::vector<Integer>{-2, -2, 0, -2}));
  EXPECT_EQ(surgery::closure_fraction(r.tangle), F(9, 2));
}

TEST(Reduce, RejectsNonFreshDiagram) {
  ChainDiagram d = surgery::build_chain(MultiplierFunction({1}, {1}));
  d.curve({CurveKind::kO, 0}).coeff = F(1, 1);
  EXPECT_THROW(surgery::reduce(d), MalformedState);
  ChainDiagram gone = surgery::build_chain(MultiplierFunction({1}, {1}));
  gone.curve({CurveKind::kL, 0}).present = false;
  EXPECT_THROW(surgery::reduce(gone), MalformedState);
}

TEST(ClosureFraction, EmptyTangleIsUndefined) {
  EXPECT_THROW(surgery::closure_fraction(TangleCF{}), DivisionUndefined);
}

TEST(Properties, MoveCountTerminationAndReplay) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const MultiplierFunction mf = random_multipliers(rng, 6, 3);
    const ChainDiagram initial = surgery::build_chain(mf);
    const Reduction r = surgery::reduce(initial);
    EXPECT_TRUE(r.final_state.is_empty());
    EXPECT_EQ(r.trace.moves.size(), 3 * mf.levels());
    EXPECT_EQ(r.trace.twist_count(), 3 * mf.levels() - zero_longitudes(mf)) << mf.to_string();
    EXPECT_EQ(surgery::replay(initial, r.trace), r.final_state) << mf.to_string();
  }
}

TEST(Properties, ClosureMatchesInvariantOnRandomSample) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 3000; ++trial) {
    const MultiplierFunction mf = random_multipliers(rng, 7, 4);
    const ProjectiveFraction expected = cfrac::invariant_of_multipliers(mf);
    const Reduction r = surgery::reduce(surgery::build_chain(mf));
    if (expected.is_infinite()) {
      EXPECT_THROW(surgery::closure_fraction(r.tangle), DivisionUndefined) << mf.to_string();
    } else {
      EXPECT_EQ(surgery::closure_fraction(r.tangle), expected) << mf.to_string();
    }
  }
}

TEST(Replay, DetectsTamperedTrace) {
  const MultiplierFunction mf({1, -1}, {2, 1});
  const ChainDiagram initial = surgery::build_chain(mf);
  Reduction r = surgery::reduce(initial);

  ReductionTrace stale = r.trace;
  stale.moves[1].updates.back().before = F(7, 1);
  EXPECT_THROW(surgery::replay(initial, stale), MalformedState);

  ReductionTrace wrong_twist = r.trace;
  wrong_twist.moves[0].twist += 1;
  EXPECT_THROW(surgery::replay(initial, wrong_twist), MalformedState);

  ReductionTrace doubled = r.trace;
  doubled.moves.push_back(doubled.moves.front());
  EXPECT_THROW(surgery::replay(initial, doubled), MalformedState);
}
