#include <benchmark/benchmark.h>

#include "circuitpack/canonical.hpp"
#include "circuitpack/enumerate.hpp"
#include "circuitpack/minor.hpp"
#include "circuitpack/packs.hpp"
#include "circuitpack/solvers.hpp"

namespace cp = circuitpack;

static void BM_NuOddDoubleCircuit(benchmark::State& state) {
  cp::Digraph d = cp::odd_double_circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cp::nu(d).value);
}
BENCHMARK(BM_NuOddDoubleCircuit)->DenseRange(3, 11, 2);

static void BM_TauOddDoubleCircuit(benchmark::State& state) {
  cp::Digraph d = cp::odd_double_circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cp::tau(d).value);
}
BENCHMARK(BM_TauOddDoubleCircuit)->DenseRange(3, 11, 2);

static void BM_TauRandom(benchmark::State& state) {
  cp::Rng rng(7);
  cp::Digraph d = cp::random_digraph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cp::tau(d).value);
}
BENCHMARK(BM_TauRandom)->Arg(8)->Arg(12)->Arg(16);

static void BM_CanonicalForm(benchmark::State& state) {
  cp::Rng rng(3);
  cp::Digraph d = cp::random_digraph(static_cast<int>(state.range(0)), 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cp::canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7)->Arg(9);

static void BM_EnumerateDigraphs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cp::enumerate_digraphs(static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_EnumerateDigraphs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// Caches are cleared each round so the search itself is timed.
static void BM_FindObstruction(benchmark::State& state) {
  cp::Digraph d = state.range(0) ? cp::f7() : cp::odd_double_circuit(5);
  for (auto _ : state) {
    cp::clear_minor_cache();
    benchmark::DoNotOptimize(cp::find_obstruction(d).has_value());
  }
}
BENCHMARK(BM_FindObstruction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PacksBruteforce(benchmark::State& state) {
  cp::Digraph d = cp::f7();
  for (auto _ : state) {
    cp::clear_packs_cache();
    benchmark::DoNotOptimize(cp::packs_bruteforce(d).packs);
  }
}
BENCHMARK(BM_PacksBruteforce)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
