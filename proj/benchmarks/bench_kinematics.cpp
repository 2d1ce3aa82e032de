#include <benchmark/benchmark.h>

#include <random>

#include "tpmkin/analysis.hpp"
#include "tpmkin/fk.hpp"
#include "tpmkin/ik.hpp"
#include "tpmkin/oracle.hpp"
#include "tpmkin/report.hpp"
#include "tpmkin/sampling.hpp"
#include "tpmkin/workspace.hpp"

namespace {

const tpmkin::MechanismParams kParams = tpmkin::reference_params();
const tpmkin::ActuatorInput kInputs = tpmkin::reference_inputs();

void BM_DirectKinematics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tpmkin::direct_kinematics(kInputs, kParams));
}
BENCHMARK(BM_DirectKinematics);

void BM_InverseKinematics(benchmark::State& state) {
  const tpmkin::PlatformPose pose = tpmkin::direct_kinematics(kInputs, kParams).front().pose;
  for (auto _ : state) benchmark::DoNotOptimize(tpmkin::inverse_kinematics(pose, kParams));
}
BENCHMARK(BM_InverseKinematics);

void BM_OracleDirect(benchmark::State& state) {
  tpmkin::OracleSettings settings;
  settings.grid_n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(tpmkin::oracle_direct(kInputs, kParams, settings));
}
BENCHMARK(BM_OracleDirect)->Arg(512)->Arg(2048);

void BM_OracleInverse(benchmark::State& state) {
  const tpmkin::PlatformPose pose = tpmkin::direct_kinematics(kInputs, kParams).front().pose;
  for (auto _ : state) benchmark::DoNotOptimize(tpmkin::oracle_inverse(pose, kParams));
}
BENCHMARK(BM_OracleInverse);

void BM_NumericJacobian(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tpmkin::numeric_jacobian(kInputs, {+1, +1, +1}, kParams));
}
BENCHMARK(BM_NumericJacobian);

void BM_SweepInputs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tpmkin::SweepGrid grid;
  grid.axes[0] = {300, 400, n};
  grid.axes[1] = {-350, -250, n};
  grid.axes[2] = {-75, 25, n};
  for (auto _ : state) benchmark::DoNotOptimize(tpmkin::sweep_inputs(kParams, grid));
  state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_SweepInputs)->Arg(5)->Arg(11);

void BM_RandomRoundTrip(benchmark::State& state) {
  std::mt19937 rng(42);
  for (auto _ : state) {
    const tpmkin::ActuatorInput q = tpmkin::random_feasible_input(rng, kParams);
    for (const auto& s : tpmkin::direct_kinematics(q, kParams))
      benchmark::DoNotOptimize(tpmkin::inverse_kinematics(s.pose, kParams));
  }
}
BENCHMARK(BM_RandomRoundTrip);

}  // namespace

BENCHMARK_MAIN();
