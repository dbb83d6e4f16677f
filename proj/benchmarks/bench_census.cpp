#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "hypermotif/census.hpp"

using namespace hypermotif;

static void BM_TriadCensus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = bench::random_graph(n, 4 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(triad_census(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TriadCensus)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_TriadCensusBruteForce(benchmark::State& state) {
  auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 4 * state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(triad_census_brute_force(g));
}
BENCHMARK(BM_TriadCensusBruteForce)->Arg(64)->Arg(128);

static void BM_RoleAssignment(benchmark::State& state) {
  auto g = bench::random_graph(2000, 8000, 2);
  std::vector<MotifClass> classes{motif_class_from_name("FFL"), motif_class_from_name("021C")};
  for (auto _ : state) benchmark::DoNotOptimize(role_assignment(g, classes));
}
BENCHMARK(BM_RoleAssignment);
