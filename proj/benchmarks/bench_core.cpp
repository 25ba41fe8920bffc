#include <benchmark/benchmark.h>

#include <random>

#include "padyn/beverton.hpp"
#include "padyn/binomial.hpp"
#include "padyn/dynamics.hpp"
#include "padyn/hensel.hpp"
#include "padyn/padic.hpp"

using namespace padyn;

static void BM_PadicMultiply(benchmark::State& state) {
  const int prec = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto x = random_with_valuation(5, 0, prec, rng);
  const auto y = random_with_valuation(5, 1, prec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PadicMultiply)->Arg(40)->Arg(200)->Arg(1000);

static void BM_LevelMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = conjugate_to_polynomial(3, 2, mpq_class(4));
  const auto dom = ResidueSet::residue_class(3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_level_map(f, dom, n));
}
BENCHMARK(BM_LevelMap)->DenseRange(4, 10, 2);

static void BM_MinimalityCheck(benchmark::State& state) {
  const auto f = conjugate_to_polynomial(3, 2, mpq_class(4));
  const auto dom = ResidueSet::residue_class(3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimality_check(f, dom, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MinimalityCheck)->Arg(5)->Arg(8);

static void BM_HenselLift(benchmark::State& state) {
  const PadicPolynomial F(5, {mpq_class(1), mpq_class(0), mpq_class(1)});
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(F, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->Arg(60)->Arg(600);

static void BM_BinomialSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binomial_sweep(2, state.range(0)));
}
BENCHMARK(BM_BinomialSweep)->Arg(100)->Arg(300);

static void BM_Repeller(benchmark::State& state) {
  const auto fp = FamilyParams::make(5, 2, mpq_class(5));
  for (auto _ : state) benchmark::DoNotOptimize(repeller_analysis(fp, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Repeller)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
