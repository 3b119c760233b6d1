#include <benchmark/benchmark.h>

#include "kprimes/arithmetic.hpp"
#include "kprimes/characters.hpp"
#include "kprimes/circle.hpp"
#include "kprimes/convolution.hpp"
#include "kprimes/lfunc.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kprimes::build_sieve(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->RangeMultiplier(10)->Range(10'000, 10'000'000)->Unit(benchmark::kMillisecond);

void BM_RkTable(benchmark::State& state) {
  const auto n = state.range(0);
  const auto tables = kprimes::build_sieve(n);
  for (auto _ : state) benchmark::DoNotOptimize(kprimes::rk_table(n, 5, tables));
}
BENCHMARK(BM_RkTable)->Arg(1000)->Arg(2001)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_LValue(benchmark::State& state) {
  const auto chi = kprimes::character_from_exponents(7, {1});
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kprimes::l_value(chi, t));
}
BENCHMARK(BM_LValue)->Arg(10)->Arg(100)->Arg(1000);

void BM_ZetaZeros(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kprimes::zeta_zeros(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_ZetaZeros)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SmoothedSum(benchmark::State& state) {
  kprimes::CircleConfig cfg;
  cfg.N = state.range(0);
  const auto tables = kprimes::build_sieve(cfg.truncation());
  const kprimes::SmoothedSum S(cfg, tables);
  double alpha = 0.1234;
  for (auto _ : state) {
    benchmark::DoNotOptimize(S(alpha));
    alpha += 1e-3;
  }
}
BENCHMARK(BM_SmoothedSum)->Arg(100)->Arg(400)->Arg(1600);

}  // namespace
BENCHMARK_MAIN();
