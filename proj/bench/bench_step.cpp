// Parallel step against the serial reference on the compression setup at
// increasing grid sizes.
#include <benchmark/benchmark.h>

#include "hcr/experiments.hpp"
#include "hcr/solver.hpp"

namespace {

using StepFn = hcr::GridField (*)(const hcr::GridField&, const hcr::VelocityField&,
                                  const hcr::StepParams&, const hcr::Scheme&, hcr::BoundaryKind);

void bm_step(benchmark::State& st, StepFn step, hcr::Scheme scheme) {
  const hcr::ExperimentSetup s = hcr::init_extreme(static_cast<std::size_t>(st.range(0)));
  const hcr::StepParams params{0.25 * s.state0.h};
  for (auto _ : st) {
    hcr::GridField out = step(s.state0, s.vel, params, scheme, s.bc);
    benchmark::DoNotOptimize(out.f.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

const StepFn kParallel = &hcr::step;
const StepFn kSerial = &hcr::serial::step;

}  // namespace

BENCHMARK_CAPTURE(bm_step, serial_hybrid, kSerial, hcr::Scheme::hybrid())
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->UseRealTime();
BENCHMARK_CAPTURE(bm_step, parallel_hybrid, kParallel, hcr::Scheme::hybrid())
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->UseRealTime();
BENCHMARK_CAPTURE(bm_step, serial_cip, kSerial, hcr::Scheme::cip())
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->UseRealTime();
BENCHMARK_CAPTURE(bm_step, parallel_cip, kParallel, hcr::Scheme::cip())
    ->RangeMultiplier(8)
    ->Range(1 << 10, 1 << 22)
    ->UseRealTime();
BENCHMARK_MAIN();
