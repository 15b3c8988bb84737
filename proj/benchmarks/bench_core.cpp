#include <benchmark/benchmark.h>

#include "holoforms/linalg.hpp"
#include "holoforms/rng.hpp"

using namespace holoforms;

static void BM_RationalMul(benchmark::State& state) {
  SplitMix64 rng(1);
  Rational a = random_rational(rng, 1000, 1000);
  Rational b = random_rational(rng, 1000, 1000);
  for (auto _ : state) {
    Rational c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalMul);

static void BM_Nullspace8x8(benchmark::State& state) {
  SplitMix64 rng(2);
  Mat m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = random_rational(rng);
  for (auto _ : state) {
    auto ns = nullspace(m);
    benchmark::DoNotOptimize(ns);
  }
}
BENCHMARK(BM_Nullspace8x8);

BENCHMARK_MAIN();
