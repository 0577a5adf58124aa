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

#include "rischan/fitting.hpp"
#include "rischan/rng.hpp"

using namespace rischan;

namespace {

std::vector<PlObservation> bench_dataset()
{
    ModelParams truth;
    truth.family = ModelFamily::FiRis;
    truth.alpha_or_ref = 24.0;
    truth.exp_d1 = 2.05;
    truth.exp_d2 = 1.95;
    truth.exp_theta_t = 1.15;
    truth.exp_theta_r = 0.8;

    CampaignGrid grid =
        build_campaign_grid(builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis));
    Rng rng(1);
    std::vector<PlObservation> data;
    for (const auto &p : grid.points)
        data.push_back({p, eval_fi_ris(truth, p) + 2.5 * rng.normal()});
    return data;
}

void BM_FitOutdoorFi(benchmark::State &state)
{
    auto data = bench_dataset();
    auto b = default_fit_bounds(ModelFamily::FiRis, Scenario::Outdoor);
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_model(data, ModelFamily::FiRis, {}, {b.lower, b.upper}));
}
BENCHMARK(BM_FitOutdoorFi);

void BM_FitOutdoorCi(benchmark::State &state)
{
    auto data = bench_dataset();
    auto b = default_fit_bounds(ModelFamily::CiRis, Scenario::Outdoor);
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_model(data, ModelFamily::CiRis, {}, {b.lower, b.upper}));
}
BENCHMARK(BM_FitOutdoorCi);

} // namespace

BENCHMARK_MAIN();
