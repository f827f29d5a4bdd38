#include <benchmark/benchmark.h>

#include <random>

#include "srsdual/rewrite.hpp"

using namespace srsdual;

namespace {

Srs free_group() { return parse_srs("a b -> _\nb a -> _\nc d -> _\nd c -> _"); }

Word random_word(std::size_t n, std::uint32_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(Symbol{static_cast<std::uint32_t>(rng() % k)});
  return w;
}

void BM_NormalizeLeftmost(benchmark::State& state) {
  auto s = free_group();
  auto w = random_word(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(s, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalizeLeftmost)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_NormalizeStack(benchmark::State& state) {
  auto s = free_group();
  StackNormalizer nf(s);
  auto w = random_word(static_cast<std::size_t>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nf(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalizeStack)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
