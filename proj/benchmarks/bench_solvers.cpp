#include <benchmark/benchmark.h>

#include "shs/heat.hpp"
#include "shs/limit_solver.hpp"
#include "shs/profiles.hpp"
#include "shs/shs_solver.hpp"

using namespace shs;

namespace {

ScalarField ignition_data(const Domain1D& d) { return sample(StepProfile{0.5, -0.25, 0.25}, d); }

}  // namespace

static void BM_DiffusionSubstep(benchmark::State& state) {
  const Domain1D d(4.0, static_cast<std::size_t>(state.range(0)));
  auto u = ignition_data(d);
  for (auto _ : state) {
    u = diffusion_substep(u, 1e-4);
    benchmark::DoNotOptimize(u[0]);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DiffusionSubstep)->RangeMultiplier(4)->Range(101, 6401);

static void BM_ReactionSubstep(benchmark::State& state) {
  const Domain1D d(4.0, static_cast<std::size_t>(state.range(0)));
  SHSState s{0.0, ignition_data(d), ScalarField::constant(d, 0.0), ScalarField::constant(d, 1.0),
             KineticsFamily::matkowsky_sivashinsky(0.02)};
  for (auto _ : state) {
    s = reaction_substep(s, 1e-4);
    benchmark::DoNotOptimize(s.w[0]);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReactionSubstep)->RangeMultiplier(4)->Range(101, 6401);

static void BM_LimitStep(benchmark::State& state) {
  const Domain1D d(4.0, static_cast<std::size_t>(state.range(0)));
  auto s = apply_initial_jump(ignition_data(d), ScalarField::constant(d, 1.0));
  for (auto _ : state) {
    s = step_limit(s, 1e-4);
    benchmark::DoNotOptimize(s.u[0]);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LimitStep)->RangeMultiplier(4)->Range(101, 6401);

static void BM_IgnitionRun(benchmark::State& state) {
  const Domain1D d(4.0, 401);
  const TimeGrid time(0.5 * d.h() * d.h(), 0.1, 100);
  const auto u0 = ignition_data(d);
  const auto v0 = ScalarField::constant(d, 1.0);
  const auto kin = KineticsFamily::matkowsky_sivashinsky(0.02);
  for (auto _ : state) {
    auto run = run_shs(u0, v0, kin, time);
    benchmark::DoNotOptimize(run.series.back().front);
  }
}
BENCHMARK(BM_IgnitionRun)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
