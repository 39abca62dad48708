#include <benchmark/benchmark.h>

#include "qrde/ewl_engine.hpp"
#include "qrde/quantum_rde.hpp"
#include "qrde_cli/cli.hpp"

namespace {

void BM_FinalState(benchmark::State& state) {
  const qrde::QuantumStrategyParam p(0.3);
  const qrde::QuantumStrategyParam q(0.7);
  const qrde::EntanglementAngle gamma(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrde::final_state(p, q, gamma));
  }
}
BENCHMARK(BM_FinalState);

void BM_JointDistribution(benchmark::State& state) {
  const qrde::QuantumStrategyParam p(0.3);
  const qrde::QuantumStrategyParam q(0.7);
  const qrde::EntanglementAngle gamma(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrde::joint_distribution(p, q, gamma));
  }
}
BENCHMARK(BM_JointDistribution);

void BM_SelectRdeQuantum(benchmark::State& state) {
  const qrde::DilemmaParams params(0.9, 0.2);
  const qrde::EntanglementAngle gamma(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrde::select_rde_quantum(params, gamma));
  }
}
BENCHMARK(BM_SelectRdeQuantum);

void BM_Sweep(benchmark::State& state) {
  qrde::cli::SweepConfig cfg;
  const int n = static_cast<int>(state.range(0));
  cfg.dg_range = {0.05, 1.0, n};
  cfg.dr_range = {0.05, 1.0, n};
  cfg.gamma_range = {0.0, qrde::EntanglementAngle::kMax, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrde::cli::sweep(cfg));
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}
BENCHMARK(BM_Sweep)->Arg(8)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
