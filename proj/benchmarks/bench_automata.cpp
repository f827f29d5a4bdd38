#include <benchmark/benchmark.h>

#include <random>

#include "srsdual/automata.hpp"
#include "srsdual/irr.hpp"

using namespace srsdual;

namespace {

Dfa random_dfa(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Dfa d;
  d.alphabet_size = 2;
  for (std::size_t q = 0; q < n; ++q) d.add_state(rng() % 3 == 0);
  for (std::size_t q = 0; q < n; ++q)
    for (std::uint32_t c = 0; c < 2; ++c) d.set(static_cast<State>(q), Symbol{c}, static_cast<State>(rng() % n));
  return d;
}

void BM_Minimize(benchmark::State& state) {
  auto d = random_dfa(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(d));
}
BENCHMARK(BM_Minimize)->RangeMultiplier(4)->Range(16, 4096);

void BM_LeftQuotient(benchmark::State& state) {
  auto m2 = random_dfa(static_cast<std::size_t>(state.range(0)), 5);
  auto m1 = random_dfa(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(left_quotient_mefa(m2, m1));
}
BENCHMARK(BM_LeftQuotient)->RangeMultiplier(4)->Range(16, 1024);

void BM_ExistsXyz(benchmark::State& state) {
  auto m = random_dfa(static_cast<std::size_t>(state.range(0)), 11);
  auto n = random_dfa(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(exists_xyz(m, n));
}
BENCHMARK(BM_ExistsXyz)->RangeMultiplier(4)->Range(16, 256);

void BM_IrrDfa(benchmark::State& state) {
  auto s = parse_srs("a b a -> a\nb b a b -> b\na a a -> _\nb a b b a -> b a");
  for (auto _ : state) benchmark::DoNotOptimize(irr_dfa(s));
}
BENCHMARK(BM_IrrDfa);

}  // namespace

BENCHMARK_MAIN();
