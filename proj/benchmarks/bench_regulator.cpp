#include <benchmark/benchmark.h>

#include <random>

#include "regpair/regulator.hpp"
#include "regpair/selftest.hpp"
#include "regpair/toeplitz.hpp"

namespace {

using namespace regpair;

SteinbergSymbol make_pair(std::size_t grid) {
  std::mt19937_64 rng(7);
  return SteinbergSymbol{selftest::random_symbol(rng, grid, 2, 8, 0.4),
                         selftest::random_symbol(rng, grid, 2, 8, 0.4)};
}

void bm_regulator_fourier(benchmark::State& state) {
  const SteinbergSymbol s = make_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(regulator_fourier(s).value);
}
BENCHMARK(bm_regulator_fourier)->Arg(1024)->Arg(4096);

void bm_regulator_integral(benchmark::State& state) {
  const SteinbergSymbol s = make_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(regulator_integral(s).value);
}
BENCHMARK(bm_regulator_integral)->Arg(1024)->Arg(4096);

void bm_steinberg_determinant(benchmark::State& state) {
  const SteinbergSymbol s = make_pair(4096);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        steinberg_operator_determinant(s.p, s.q, n, n / 8).value);
}
BENCHMARK(bm_steinberg_determinant)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void bm_commutator_determinant(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const std::size_t grid = 4096;
  const CircleFunction a = selftest::random_log(rng, grid, 8, 0.4);
  const CircleFunction b = selftest::random_log(rng, grid, 8, 0.4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(commutator_determinant(a, b, n, n / 8).value);
}
BENCHMARK(bm_commutator_determinant)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
