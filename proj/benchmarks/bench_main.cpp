#include <benchmark/benchmark.h>

#include <random>

#include "levyld/cadlag.hpp"
#include "levyld/cluster_measure.hpp"
#include "levyld/levy_model.hpp"
#include "levyld/solution_map.hpp"

using namespace levyld;

namespace {

SimConfig sim_at(double grid) {
  SimConfig s;
  s.epsilon = 1.0 / 64;
  s.grid_delta = grid;
  return s;
}

void BM_SampleScaledPath(benchmark::State& state) {
  const TailModel m = stable_preset(1.5);
  const SimConfig s = sim_at(1.0 / static_cast<double>(state.range(0)));
  const TruncationPlan plan = plan_truncation(m, s);
  Rng rng = make_rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_scaled_path(m, s, plan, rng));
}
BENCHMARK(BM_SampleScaledPath)->Arg(256)->Arg(4096);

void BM_EulerSolve(benchmark::State& state) {
  const TailModel m = stable_preset(1.5);
  const SimConfig s = sim_at(1.0 / static_cast<double>(state.range(0)));
  const CadlagPath noise = sample_scaled_path(m, s);
  const DriftSpec d = drift_cos_scaled(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(euler_solve_sde(d, noise, s.grid_delta));
}
BENCHMARK(BM_EulerSolve)->Arg(256)->Arg(4096);

void BM_ApplyF(benchmark::State& state) {
  const TailModel m = stable_preset(1.5);
  const SimConfig s = sim_at(1.0 / static_cast<double>(state.range(0)));
  const CadlagPath noise = sample_scaled_path(m, s);
  const DriftSpec d = drift_cos_scaled(0.2);
  SolverConfig cfg;
  cfg.step = s.grid_delta;
  for (auto _ : state) benchmark::DoNotOptimize(apply_F(d, noise, cfg));
}
BENCHMARK(BM_ApplyF)->Arg(256)->Arg(4096);

void BM_J1StepExact(benchmark::State& state) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0), sz(-2.0, 2.0);
  auto make = [&] {
    std::vector<JumpEvent> j;
    for (int i = 0; i < state.range(0); ++i) j.push_back({1.0 - u(gen), sz(gen)});
    return CadlagPath::step(j);
  };
  const CadlagPath x = make(), y = make();
  for (auto _ : state) benchmark::DoNotOptimize(j1_step_exact(x, y));
}
BENCHMARK(BM_J1StepExact)->Arg(3)->Arg(10)->Arg(30);

void BM_ClusterEstimate(benchmark::State& state) {
  ClusterSampleSpec s;
  s.j = 1;
  s.n_samples = 100000;
  s.threads = 1;
  auto pred = [](const CadlagPath& x) { return largest_jump_sizes(x).first >= 2.0; };
  for (auto _ : state) benchmark::DoNotOptimize(estimate_Cjk(pred, s));
}
BENCHMARK(BM_ClusterEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
