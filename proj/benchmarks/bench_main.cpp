#include <benchmark/benchmark.h>

#include "stirsym/identities.hpp"
#include "stirsym/noncrossing.hpp"
#include "stirsym/stirling.hpp"
#include "stirsym/trees.hpp"

using namespace stirsym;

static void BM_EnumerateStirling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stirling(n, r));
}
BENCHMARK(BM_EnumerateStirling)->Args({5, 1})->Args({6, 1})->Args({5, 2})->Args({6, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_SpPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sp(n, 2));
}
BENCHMARK(BM_SpPolynomial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// cold ring each iteration, so this measures table construction
static void BM_TransitionTables(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Partition top{d};
  for (auto _ : state) {
    SymRing ring(d);
    benchmark::DoNotOptimize(ring.transition(Basis::s, top, Basis::e, top));
  }
}
BENCHMARK(BM_TransitionTables)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_CompositionalInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  auto f = shifted_signed_h_series(Flavor::egf, order);
  for (auto _ : state) benchmark::DoNotOptimize(f.compositional_inverse());
}
BENCHMARK(BM_CompositionalInverse)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_MultiplicativeInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<SymFunc> c;
  for (int n = 0; n <= order; ++n)
    c.push_back(n == 0 ? SymFunc::constant(1) : SymFunc::basis_element(Basis::h, Partition{n}, n % 2 ? -1 : 1));
  Series<SymFunc> f(Flavor::egf, order, c);
  for (auto _ : state) benchmark::DoNotOptimize(f.inverse());
}
BENCHMARK(BM_MultiplicativeInverse)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_NormalizedTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_normalized(n));
}
BENCHMARK(BM_NormalizedTrees)->DenseRange(4, 7);

static void BM_Noncrossing(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(noncrossing_partitions(n));
}
BENCHMARK(BM_Noncrossing)->DenseRange(4, 8);
BENCHMARK_MAIN();
