#include <benchmark/benchmark.h>

#include "jw/cyclic/jmodule.hpp"
#include "jw/exactlin/modular.hpp"
#include "jw/freelie/word.hpp"
#include "jw/grouppres/presentation.hpp"
#include "jw/johnson/johnson.hpp"

using namespace jw;

static void BM_HallWords(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh enumeration each iteration, bypassing the in-process cache.
    benchmark::DoNotOptimize(freelie::lyndon_words(3, k));
  }
}
BENCHMARK(BM_HallWords)->DenseRange(6, 10, 2);

static void BM_TraceRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(johnson::trace_rank(n, k, cyclic::QuotientMode::bar, 1));
}
BENCHMARK(BM_TraceRank)->Args({3, 6})->Args({3, 8})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_JohnsonImage(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(johnson::johnson_image(3, k, threads).dim);
}
BENCHMARK(BM_JohnsonImage)->Args({5, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_TraceBlockRank(benchmark::State& state) {
  for (auto _ : state) {
    const auto block = johnson::trace_block({3, 2, 2}, cyclic::QuotientMode::bar);
    benchmark::DoNotOptimize(exactlin::certified_rank(block.matrix));
  }
}
BENCHMARK(BM_TraceBlockRank)->Unit(benchmark::kMillisecond);

static void BM_H1Braid(benchmark::State& state) {
  const auto g = grouppres::builtin(grouppres::GroupKind::braid, static_cast<int>(state.range(0)));
  const auto act = grouppres::LatticeAction::standard(g);
  for (auto _ : state) benchmark::DoNotOptimize(grouppres::h1_twisted(g, act));
}
BENCHMARK(BM_H1Braid)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
