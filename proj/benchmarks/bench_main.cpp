#include <benchmark/benchmark.h>

#include "hypermatch/constructions.hpp"
#include "hypermatch/containment.hpp"
#include "hypermatch/lp.hpp"
#include "hypermatch/matching.hpp"

namespace hm = hypermatch;

static void BM_ExactNuExtremal(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::build_hknm(n, 3, n / 3).graph;
  for (auto _ : state) benchmark::DoNotOptimize(hm::exact_nu(h).nu);
}
BENCHMARK(BM_ExactNuExtremal)->DenseRange(9, 21, 6);

static void BM_ExactNuRandom(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::random_kgraph(n, 3, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hm::exact_nu(h).nu);
}
BENCHMARK(BM_ExactNuRandom)->DenseRange(12, 24, 6);

static void BM_FractionalMatching(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::random_kgraph(n, 3, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hm::max_fractional_matching(h).value);
}
BENCHMARK(BM_FractionalMatching)->DenseRange(8, 14, 3);

static void BM_FractionalCover(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::random_kgraph(n, 3, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hm::min_fractional_cover(h).value);
}
BENCHMARK(BM_FractionalCover)->DenseRange(8, 14, 3);

static void BM_Nibble(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::random_kgraph(n, 3, 100.0 / (0.5 * n * n), 3);
  hm::NibbleConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(hm::nibble_matching(h, cfg).matching.size());
}
BENCHMARK(BM_Nibble)->Arg(300)->Arg(1000);

static void BM_EpsContains(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto h = hm::random_planted(n, 3, 4, 0.9, 0.05, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hm::eps_contains(h, 4, hm::Rational(1, 10)).deficiency);
}
BENCHMARK(BM_EpsContains)->Arg(15)->Arg(30);

BENCHMARK_MAIN();
