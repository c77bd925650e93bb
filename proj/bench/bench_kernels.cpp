// Reference (one exp per summand) vs serial separable vs OpenMP batch.
#include <benchmark/benchmark.h>

#include <vector>

#include "thetalab/theta/kernels.hpp"
#include "thetalab/theta/sampling.hpp"

using namespace thetalab::theta;

namespace {

struct Fixture {
  PeriodMatrix Z;
  ThetaEvaluator ev;
  std::vector<SurfacePoint> points;

  explicit Fixture(std::size_t n) : Z(make_Z()), ev(Z) {
    Rng rng(1);
    for (std::size_t i = 0; i < n; ++i) points.push_back(random_cell_point(rng, Z));
  }
  static PeriodMatrix make_Z() {
    Rng rng(0);
    return random_period_matrix(rng, true);
  }
};

void BM_reference(benchmark::State& st) {
  Fixture f(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(reference::theta_A_values(f.ev, f.points));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_serial(benchmark::State& st) {
  Fixture f(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::theta_A_values(f.ev, f.points));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_parallel(benchmark::State& st) {
  Fixture f(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(parallel::theta_A_values(f.ev, f.points));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_serial_jets(benchmark::State& st) {
  Fixture f(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(serial::theta_A_jets(f.ev, f.points));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_parallel_jets(benchmark::State& st) {
  Fixture f(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(parallel::theta_A_jets(f.ev, f.points));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_reference)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_serial_jets)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_jets)->Arg(4096)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
