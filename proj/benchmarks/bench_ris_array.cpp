// SPDX-License-Identifier: Apache-2.0
//
// rischan - synthesis and model-fitting toolkit for RIS-assisted channel
// measurements
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "rischan/ris_array.hpp"

using namespace rischan;

namespace {

MeasurementPoint bench_point()
{
    return {9.0, 8.0, 45.0, 180.0, 45.0, 0.0, Scenario::Outdoor, Mode::IntelligentRis, "bench"};
}

void BM_IdealPhaseProfile(benchmark::State &state)
{
    RisConfiguration ris = default_ris();
    MeasurementPoint p = bench_point();
    for (auto _ : state)
        benchmark::DoNotOptimize(ideal_phase_profile(p, ris, ris.center_frequency));
}
BENCHMARK(BM_IdealPhaseProfile);

void BM_QuantizeCodebook(benchmark::State &state)
{
    RisConfiguration ris = default_ris();
    PhaseProfile profile = ideal_phase_profile(bench_point(), ris, ris.center_frequency);
    for (auto _ : state)
        benchmark::DoNotOptimize(quantize_codebook(profile, ris, 0.0));
}
BENCHMARK(BM_QuantizeCodebook);

void BM_ThresholdSweep(benchmark::State &state)
{
    RisConfiguration ris = default_ris();
    PhaseProfile profile = ideal_phase_profile(bench_point(), ris, ris.center_frequency);
    for (auto _ : state)
        benchmark::DoNotOptimize(best_threshold_codebook(profile, ris));
}
BENCHMARK(BM_ThresholdSweep);

} // namespace
