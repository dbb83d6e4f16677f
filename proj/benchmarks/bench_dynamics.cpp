#include <benchmark/benchmark.h>

#include "hypermotif/analysis.hpp"
#include "hypermotif/catalog.hpp"
#include "hypermotif/ode.hpp"

using namespace hypermotif;

static void BM_Rk4Horizon(benchmark::State& state) {
  auto e = catalog_entry("M66-69");
  for (auto _ : state) benchmark::DoNotOptimize(integrate(e.model, e.initial, e.horizon, e.step));
}
BENCHMARK(BM_Rk4Horizon)->Unit(benchmark::kMillisecond);

static void BM_FixedPoints4d(benchmark::State& state) {
  auto m = circuit_library("M62-65");
  for (auto _ : state) benchmark::DoNotOptimize(find_fixed_points(m));
}
BENCHMARK(BM_FixedPoints4d)->Unit(benchmark::kMillisecond);

static void BM_PhasePortrait(benchmark::State& state) {
  auto m = circuit_library("M4-5");
  for (auto _ : state) benchmark::DoNotOptimize(phase_portrait(m));
}
BENCHMARK(BM_PhasePortrait)->Unit(benchmark::kMillisecond);
