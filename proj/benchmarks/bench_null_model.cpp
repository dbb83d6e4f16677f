#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "hypermotif/null_model.hpp"

using namespace hypermotif;

static void BM_DegreePreservingRewire(benchmark::State& state) {
  auto g = bench::random_graph(300, 1200, 3);
  NullModelConfig cfg;
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rewire_degree_preserving(g, cfg, rng));
}
BENCHMARK(BM_DegreePreservingRewire)->Unit(benchmark::kMillisecond);

static void BM_CensusDelta(benchmark::State& state) {
  auto g = bench::random_graph(300, 1200, 4);
  RewiringState rs(g);
  Rng rng(2);
  RewiringState::Move m;
  for (auto _ : state) {
    if (rs.propose(rng, m)) benchmark::DoNotOptimize(rs.census_delta(m));
  }
}
BENCHMARK(BM_CensusDelta);

static void BM_AnnealMember(benchmark::State& state) {
  auto g = bench::random_graph(300, 1200, 5);
  const Census target = triad_census(g);
  NullModelConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    auto start = rewire_degree_preserving(g, cfg, rng);
    auto r = anneal_to_census(start, target, cfg, rng);
    state.counters["residual"] = static_cast<double>(r.residual);
  }
}
BENCHMARK(BM_AnnealMember)->Unit(benchmark::kMillisecond)->Iterations(5);
