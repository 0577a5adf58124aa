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

#include "rischan/dsp.hpp"
#include "rischan/synthesis.hpp"

using namespace rischan;

namespace {

FrequencySweep bench_sweep()
{
    SynthesisConfig cfg;
    return synth_sweep_from_paths(
        {{30e-9, 1.0, 0.0}, {80e-9, 0.5, 1.0}, {180e-9, 0.25, 2.0}}, cfg, "bench");
}

void BM_CtfToCir(benchmark::State &state)
{
    FrequencySweep sweep = bench_sweep();
    for (auto _ : state)
        benchmark::DoNotOptimize(ctf_to_cir(sweep));
}
BENCHMARK(BM_CtfToCir);

void BM_FullPdpChain(benchmark::State &state)
{
    FrequencySweep sweep = bench_sweep();
    for (auto _ : state)
    {
        PowerDelayProfile pdp = compute_pdp(sweep);
        auto mpcs = detect_mpcs(pdp);
        benchmark::DoNotOptimize(rms_delay_spread(mpcs));
    }
}
BENCHMARK(BM_FullPdpChain);

void BM_SynthSweep(benchmark::State &state)
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;
    cfg.multipath = true;
    cfg.shadow_sigma_db = 2.53;
    MeasurementPoint p{9.0, 8.0, 45.0, 180.0, 45.0, 0.0, Scenario::Outdoor,
                       Mode::IntelligentRis, "bench"};
    for (auto _ : state)
        benchmark::DoNotOptimize(synth_sweep(p, cfg, ris));
}
BENCHMARK(BM_SynthSweep);

} // namespace
