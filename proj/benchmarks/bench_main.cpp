#include <benchmark/benchmark.h>

#include "starcount/advantage.hpp"
#include "starcount/counting.hpp"
#include "starcount/graph.hpp"
#include "starcount/rng.hpp"
#include "starcount/shape.hpp"
#include "starcount/statistics.hpp"

namespace {

using namespace starcount;

Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return Graph::from_sorted_unique(n, sample_gnp_edges(n, p, rng));
}

void BM_SampleGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 1000.0;
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sample_gnp_edges(n, p, rng));
  state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}
BENCHMARK(BM_SampleGnp)->Args({1000, 500})->Args({1000, 10})->Args({10000, 1});

void BM_CountCopies(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.1, 2);
  const Shape s = state.range(1) == 0 ? clique_shape(3) : star_shape(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_labelled_copies(s, g));
}
BENCHMARK(BM_CountCopies)->Args({200, 0})->Args({200, 1})->Args({800, 0});

void BM_SignedStarFast(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(signed_star_count(3, g, 0.3));
}
BENCHMARK(BM_SignedStarFast)->Arg(9)->Arg(200)->Arg(2000);

void BM_SignedStarNaive(benchmark::State& state) {
  const Graph g = gnp(static_cast<int>(state.range(0)), 0.3, 3);
  const Shape s = star_shape(3);
  for (auto _ : state) benchmark::DoNotOptimize(signed_count_naive(s, g, 0.3));
}
BENCHMARK(BM_SignedStarNaive)->Arg(9)->Arg(20);

void BM_CliqueCountSparse(benchmark::State& state) {
  const Graph g = gnp(4096, 1.0 / 64.0, 4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unsigned_clique_count(k, g, kDefaultWorkLimit));
}
BENCHMARK(BM_CliqueCountSparse)->Arg(3)->Arg(8);

void BM_StarCriterion(benchmark::State& state) {
  const auto prof = DegreeProfile::from_classes({{999, 1000}, {10, 5000}});
  for (auto _ : state) benchmark::DoNotOptimize(star_criterion(prof, 1000000, 0.5, 10));
}
BENCHMARK(BM_StarCriterion);

void BM_TotalAdvantage(benchmark::State& state) {
  const Graph h = gnp(12, 0.5, 5);
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(total_advantage(h, 1000, 0.5, D));
}
BENCHMARK(BM_TotalAdvantage)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
