#include <benchmark/benchmark.h>

#include "confed/bounds.hpp"
#include "confed/harness.hpp"
#include "confed/recover.hpp"

using namespace confed;

namespace {

void BM_TrialsSerial(benchmark::State& state) {
  Config cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg, Target::H, Execution::Serial));
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void BM_TrialsOpenMP(benchmark::State& state) {
  Config cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg, Target::H, Execution::OpenMP));
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}

void BM_AuditSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_audit("chebyshev", 4, n, Execution::Serial));
}

void BM_AuditOpenMP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_audit("chebyshev", 4, n, Execution::OpenMP));
}

void BM_BackwardError(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  const auto parts = build_working(make_basis(BasisKind::Chebyshev1, n), random_unbalanced_poly(rng, n));
  const auto pert = random_perturbation(rng, n, 1e-8, 1e-8, 1e-8, PerturbStructure::Dense);
  for (auto _ : state) benchmark::DoNotOptimize(backward_error(parts, pert));
}

void BM_LagrangeNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = build_working(make_basis(BasisKind::Chebyshev1, n), std::vector<double>(n, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_inf_norm(parts));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsOpenMP)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditOpenMP)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BackwardError)->Arg(5)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LagrangeNorm)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
