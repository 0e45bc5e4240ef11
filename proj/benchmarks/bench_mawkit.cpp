#include <benchmark/benchmark.h>

#include "mawkit/mawkit.hpp"

using namespace mawkit;

static void BM_MinimalForbiddenWords_Fibonacci(benchmark::State& state) {
  const PeriodicWord w = fibonacci_word(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_forbidden_words(w));
  state.counters["period"] = static_cast<double>(w.length());
}
BENCHMARK(BM_MinimalForbiddenWords_Fibonacci)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

static void BM_Classify_Fibonacci(benchmark::State& state) {
  const ForbiddenSystem s = minimal_forbidden_words(fibonacci_word(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify_Fibonacci)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

static void BM_VerifyIdentities(benchmark::State& state) {
  const PeriodicWord w = fibonacci_word(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(w));
}
BENCHMARK(BM_VerifyIdentities)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_EnumeratePrimitive(benchmark::State& state) {
  const Alphabet ab = Alphabet::binary();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primitive_words(ab, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumeratePrimitive)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_CodelengthTable(benchmark::State& state) {
  const Alphabet ab = Alphabet::binary();
  const SearchOptions opts{SearchOptions{}.budget, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(codelength_table(ab, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_CodelengthTable)->Args({14, 1})->Args({14, 4})->Args({16, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
