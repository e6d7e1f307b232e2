// Copyright 2026 The rpqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rpqaoa/analytic.h"
#include "rpqaoa/problems.h"
#include "rpqaoa/qaoa_sim.h"

namespace {

using namespace rpqaoa;

QuboInstance instance(int n) { return random_qubo(n, false, 12345 + n); }

void BM_BuildCostTable(benchmark::State &state) {
    const QuboInstance inst = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_cost_table(inst));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildCostTable)->DenseRange(8, 20, 4);

void BM_RunQaoa(benchmark::State &state) {
    const CostTable table = build_cost_table(instance(static_cast<int>(state.range(0))));
    const AngleSet angles = AngleSet::random(static_cast<int>(state.range(1)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_qaoa(table, angles));
    }
}
BENCHMARK(BM_RunQaoa)->ArgsProduct({{8, 12, 16}, {1, 3}});

template <AverageStrategy kStrategy>
void BM_AngleAverage(benchmark::State &state) {
    const CostTable table = build_cost_table(instance(static_cast<int>(state.range(0))));
    const LevelSpectrum spectrum = level_decomposition(table);
    const AngleAverageKernel kernel(table.num_variables());
    for (auto _ : state) {
        benchmark::DoNotOptimize(rp_avg_distribution(table, spectrum, kernel, kStrategy));
    }
}
BENCHMARK(BM_AngleAverage<AverageStrategy::direct_pairs>)->DenseRange(6, 10, 2);
BENCHMARK(BM_AngleAverage<AverageStrategy::distance_profile>)->DenseRange(6, 16, 2);
BENCHMARK(BM_AngleAverage<AverageStrategy::automatic>)->DenseRange(6, 16, 2);

void BM_MonteCarloAverage(benchmark::State &state) {
    const CostTable table = build_cost_table(instance(static_cast<int>(state.range(0))));
    const LevelSpectrum spectrum = level_decomposition(table);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_average_distribution(table, spectrum, 1, 200, 3));
    }
}
BENCHMARK(BM_MonteCarloAverage)->DenseRange(6, 10, 2);

}  // namespace
BENCHMARK_MAIN();
