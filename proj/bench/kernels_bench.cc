// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels on the exponential checkers.

#include <benchmark/benchmark.h>

#include "sparsemds/balancer.h"
#include "sparsemds/mds_codec.h"
#include "sparsemds/sensor_sim.h"
#include "sparsemds/support_matrix.h"

namespace {

using namespace sparsemds;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_VerifyMds(benchmark::State& state) {
  const GeneratorMatrix g = instantiate(construct_balanced_support(20, 10).matrix).generator;
  for (auto _ : state) benchmark::DoNotOptimize(verify_mds(g, mode(state)).is_mds);
  set_label(state);
}
BENCHMARK(BM_VerifyMds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_P3Bruteforce(benchmark::State& state) {
  const SupportMatrix m = construct_balanced_support(40, 18).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(check_p3_bruteforce(m, mode(state)).holds);
  set_label(state);
}
BENCHMARK(BM_P3Bruteforce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HallColumns(benchmark::State& state) {
  const SupportMatrix m = construct_balanced_support(20, 10).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(check_hall_columns(m, mode(state)));
  set_label(state);
}
BENCHMARK(BM_HallColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AllKSubsetsMatchable(benchmark::State& state) {
  const SupportMatrix m = construct_balanced_support(20, 8).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(check_all_k_subsets_matchable(m, mode(state)));
  set_label(state);
}
BENCHMARK(BM_AllKSubsetsMatchable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinimumDistance(benchmark::State& state) {
  const GeneratorMatrix g = instantiate(construct_balanced_support(10, 3).matrix).generator;
  for (auto _ : state) benchmark::DoNotOptimize(minimum_distance_bruteforce(g, mode(state)));
  set_label(state);
}
BENCHMARK(BM_MinimumDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Simulation(benchmark::State& state) {
  const SimulationConfig config{.n = 12, .k = 6, .trials = 2000, .errors_per_trial = 3, .seed = 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(config, mode(state)).successes);
  set_label(state);
}
BENCHMARK(BM_Simulation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
