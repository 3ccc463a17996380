#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "repgas/hypergraph.hpp"
#include "repgas/potential.hpp"
#include "repgas/series.hpp"
#include "repgas/space.hpp"

namespace {

using namespace repgas;

MetricMeasureSpace unit_interval() {
  return MetricMeasureSpace::euclidean_box(Point{0.0}, Point{1.0});
}

void BM_hamiltonian(benchmark::State& state) {
  const MetricMeasureSpace space = unit_interval();
  const Potential rods = Potential::hard_sphere(space, 2, 0.05);
  const int n = static_cast<int>(state.range(0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Point> tuple;
  for (int i = 0; i < n; ++i) tuple.push_back(Point{uni(rng)});

  for (auto _ : state) {
    benchmark::DoNotOptimize(rods.hamiltonian(tuple));
  }
}
BENCHMARK(BM_hamiltonian)->Arg(2)->Arg(4)->Arg(8);

void BM_partition_table(benchmark::State& state) {
  const MetricMeasureSpace space = unit_interval();
  const Region region = space.carrier_region();
  const Potential rods = Potential::hard_sphere(space, 2, 0.25);
  QuadratureSpec spec;
  spec.resolution = static_cast<int>(state.range(0));
  spec.budget = std::size_t{1} << 16;

  for (auto _ : state) {
    benchmark::DoNotOptimize(
        interaction_integrals(space, region, rods, 4, spec));
  }
}
BENCHMARK(BM_partition_table)->Arg(16)->Arg(64)->Arg(256);

void BM_independent_sets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});  // path graph
  const Hypergraph graph(n, 2, edges);

  for (auto _ : state) {
    benchmark::DoNotOptimize(independent_set_counts(graph));
  }
}
BENCHMARK(BM_independent_sets)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
