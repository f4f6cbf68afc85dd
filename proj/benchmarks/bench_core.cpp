#include <benchmark/benchmark.h>

#include "sl2z/congruence.hpp"
#include "sl2z/gen.hpp"
#include "sl2z/sl2zmod.hpp"

namespace {

void BM_compose(benchmark::State &state) {
  auto g = sl2z::gamma0(static_cast<long long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2z::compose(g.sigma_l(), g.sigma_r()));
}
BENCHMARK(BM_compose)->Arg(12)->Arg(24);

void BM_power_large_exponent(benchmark::State &state) {
  auto g = sl2z::gamma1(17);
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2z::power(g.sigma_r(), 1'000'000'007LL));
}
BENCHMARK(BM_power_large_exponent);

void BM_is_congruence(benchmark::State &state) {
  auto g = sl2z::gamma0(static_cast<long long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2z::is_congruence(g));
}
BENCHMARK(BM_is_congruence)->Arg(8)->Arg(24);

void BM_oracle(benchmark::State &state) {
  auto g = sl2z::gamma0(static_cast<long long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sl2z::oracle_factors_through(g, static_cast<long long>(state.range(0))));
}
BENCHMARK(BM_oracle)->Arg(8)->Arg(16);

void BM_enumerate(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2z::enumerate_subgroups(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
