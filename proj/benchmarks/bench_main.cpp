#include <benchmark/benchmark.h>

#include "bitwist/abelian.hpp"
#include "bitwist/cfrac.hpp"
#include "bitwist/coset.hpp"
#include "bitwist/matrix.hpp"
#include "bitwist/presentation.hpp"
#include "bitwist/surgery.hpp"

using namespace bitwist;

namespace {

// Four-level multiplier function with nonzero longitudes everywhere.
const MultiplierFunction kFourLevels({1, -1, 1, -1}, {2, -3, 1, 4});

void BM_SmithNormalFormCirculant(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const IntMatrix m = abelian::circulant(abelian::exponent_polynomial_via_Q(kFourLevels), n);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmithNormalFormCirculant)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_HomologyTable(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint32_t n = 1; n <= 30; ++n) benchmark::DoNotOptimize(abelian::homology(kFourLevels, n));
  }
}
BENCHMARK(BM_HomologyTable);

void BM_CosetFibonacci(benchmark::State& state) {
  const FinitePresentation pres =
      presentation::fibonacci_presentation(static_cast<std::uint32_t>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(coset::enumerate(pres, 200000));
}
BENCHMARK(BM_CosetFibonacci)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_CosetSieradski(benchmark::State& state) {
  const FinitePresentation pres =
      presentation::sieradski_presentation(static_cast<std::uint32_t>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(coset::enumerate(pres, 20000));
}
BENCHMARK(BM_CosetSieradski)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SurgeryReduce(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  std::vector<int> lat(levels);
  std::vector<std::int64_t> lon(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    lat[i] = i % 2 == 0 ? 1 : -1;
    lon[i] = static_cast<std::int64_t>(i % 5) - 2;
  }
  const ChainDiagram chain = surgery::build_chain(MultiplierFunction(lat, lon));
  for (auto _ : state) benchmark::DoNotOptimize(surgery::reduce(chain));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SurgeryReduce)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_EvenContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    for (long q = 2; q <= 200; q += 2) {
      benchmark::DoNotOptimize(cfrac::even_cf_expansion(ProjectiveFraction(201, q)));
    }
  }
}
BENCHMARK(BM_EvenContinuedFraction);

void BM_RealizeKnot(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cfrac::realize_knot(ProjectiveFraction(1001, 286)));
}
BENCHMARK(BM_RealizeKnot);

}  // namespace
BENCHMARK_MAIN();
