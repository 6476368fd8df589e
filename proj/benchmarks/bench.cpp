#include <benchmark/benchmark.h>

#include <random>

#include "tlh/cellular.hpp"

using namespace tlh;

static void BM_Enumerate(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(m));
  state.SetLabel(std::to_string(basis_size_formula(m)) + " diagrams");
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

// Random basis products; the sample is fixed per size.
static void BM_Multiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto basis = enumerate_diagrams(m);
  std::mt19937_64 rng(20240601);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(256);
  for (auto& p : pairs) p = {rng() % basis.size(), rng() % basis.size()};
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(multiply(basis[a], basis[b]));
  }
}
BENCHMARK(BM_Multiply)->DenseRange(3, 8);

static void BM_Factorize(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto basis = enumerate_diagrams(m);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(basis[i++ % basis.size()]));
}
BENCHMARK(BM_Factorize)->DenseRange(3, 6);

static void BM_GramDeterminant(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CellLabel l = CellLabel::plain(m / 2 - (m % 2 == 0 ? 1 : 0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(l, m).determinant());
  state.SetLabel("W(" + l.to_string() + ")");
}
BENCHMARK(BM_GramDeterminant)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
