#include <benchmark/benchmark.h>

#include "srsdual/fp_dwindling.hpp"

using namespace srsdual;

namespace {

// alpha = (a b b)^k is irreducible under {a b a -> a}.
void BM_FpDwindling(benchmark::State& state) {
  auto s = parse_srs("alphabet: a b\na b a -> a");
  Word unit = s.alphabet.parse_known("a b b");
  Word alpha;
  for (std::int64_t i = 0; i < state.range(0); ++i) alpha += unit;
  auto inst = FpInstance::make(s, alpha);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fp_dwindling(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FpDwindling)->RangeMultiplier(2)->Range(8, 1024)->Complexity();

}  // namespace

BENCHMARK_MAIN();
