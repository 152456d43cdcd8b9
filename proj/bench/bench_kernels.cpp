// Serial vs OpenMP kernels side by side.

#include <benchmark/benchmark.h>

#include "reserve/optimize.hpp"
#include "reserve/simulate.hpp"

using namespace reserve;

namespace {

SimConfig survival_config() {
  return SimConfig{ModelVariant::Full, ModelParams(0.5, 5, 0.1, 0.1, 0.05),
                   Distance(10), 200000, 20, 42};
}

void BM_survival_serial(benchmark::State& state) {
  const auto cfg = survival_config();
  const auto init = OccupancyDistribution::point_mass(2);
  for (auto _ : state) {
    auto est = estimate_survival_serial(cfg, init);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_survival_serial)->Unit(benchmark::kMillisecond);

void BM_survival_parallel(benchmark::State& state) {
  const auto cfg = survival_config();
  const auto init = OccupancyDistribution::point_mass(2);
  for (auto _ : state) {
    auto est = estimate_survival(cfg, init);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_survival_parallel)->Unit(benchmark::kMillisecond);

void BM_stationary_serial(benchmark::State& state) {
  const SimConfig cfg{ModelVariant::Recruitment, ModelParams(0.5, 5, 0.1, 0.05),
                      Distance(10), 20000, 0, 42, 500};
  for (auto _ : state) {
    auto est = estimate_stationary_serial(cfg);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_stationary_serial)->Unit(benchmark::kMillisecond);

void BM_stationary_parallel(benchmark::State& state) {
  const SimConfig cfg{ModelVariant::Recruitment, ModelParams(0.5, 5, 0.1, 0.05),
                      Distance(10), 20000, 0, 42, 500};
  for (auto _ : state) {
    auto est = estimate_stationary(cfg);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_stationary_parallel)->Unit(benchmark::kMillisecond);

void BM_sweep_serial(benchmark::State& state) {
  const ObjectiveSpec spec{ModelVariant::Recruitment,
                           ObjectiveKind::EquilibriumPersistence};
  const ModelParams p(0.5, 5, 0.1, 0.05);
  for (auto _ : state) {
    auto curve = sweep_serial(spec, p, 0.0, 100.0, 4001);
    benchmark::DoNotOptimize(curve);
  }
}
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);

void BM_sweep_parallel(benchmark::State& state) {
  const ObjectiveSpec spec{ModelVariant::Recruitment,
                           ObjectiveKind::EquilibriumPersistence};
  const ModelParams p(0.5, 5, 0.1, 0.05);
  for (auto _ : state) {
    auto curve = sweep(spec, p, 0.0, 100.0, 4001);
    benchmark::DoNotOptimize(curve);
  }
}
BENCHMARK(BM_sweep_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
