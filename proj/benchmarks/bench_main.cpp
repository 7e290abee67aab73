// Microbenchmarks for the computational kernels: the stability solver against
// its exhaustive oracle, subset tables, canonical labeling, and the two ways
// of producing the maximal alpha-1 family of a join. Seeds are fixed so runs
// are comparable.
#include <benchmark/benchmark.h>

#include "alphacrit/canonical.hpp"
#include "alphacrit/critical.hpp"
#include "alphacrit/factory.hpp"
#include "alphacrit/generators.hpp"
#include "alphacrit/graph.hpp"
#include "alphacrit/ops.hpp"
#include "alphacrit/oracle.hpp"
#include "alphacrit/solver.hpp"

namespace {

using namespace alphacrit;

Graph seeded_graph(int n, double p) {
  Rng rng(7777);
  return random_graph(rng, n, p);
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

JoinQuadruple c5_join() {
  const Graph c5 = cycle_graph(5);
  return {c5, canonical_subgraph(c5, 0), c5, canonical_subgraph(c5, 0)};
}

void bm_stability_petersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(stability_number(g));
}
BENCHMARK(bm_stability_petersen);

void bm_stability_random(benchmark::State& state) {
  const Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(stability_number(g));
}
BENCHMARK(bm_stability_random)->Arg(16)->Arg(20)->Arg(24);

void bm_oracle_random(benchmark::State& state) {
  const Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_stability_number(g));
}
BENCHMARK(bm_oracle_random)->Arg(16)->Arg(20);

void bm_subset_table(benchmark::State& state) {
  const Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(subset_stability_table(g));
}
BENCHMARK(bm_subset_table)->Arg(12)->Arg(16);

void bm_canonical_form(benchmark::State& state) {
  const Graph g = seeded_graph(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void bm_criticality_report(benchmark::State& state) {
  const Graph g = odd_subdivide(complete_graph(4), EdgeRef(0, 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_alpha_critical(g));
}
BENCHMARK(bm_criticality_report);

void bm_join_enumerate_maximal(benchmark::State& state) {
  const Graph j = one_join(c5_join());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_alpha_minus_one(j));
}
BENCHMARK(bm_join_enumerate_maximal);

void bm_join_predict_maximal(benchmark::State& state) {
  const JoinQuadruple q = c5_join();
  for (auto _ : state) benchmark::DoNotOptimize(predict_maximal_in_join(q));
}
BENCHMARK(bm_join_predict_maximal);

void bm_maximum_set_enumeration(benchmark::State& state) {
  const Graph g = seeded_graph(18, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(all_maximum_stable_sets(g));
}
BENCHMARK(bm_maximum_set_enumeration);

}  // namespace

BENCHMARK_MAIN();
