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

#include <doctest.h>

#include "rischan/fitting.hpp"
#include "rischan/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <random>

using namespace rischan;

namespace {

ModelParams make_params(ModelFamily family, double a, double e1, double e2, double e3, double e4)
{
    ModelParams p;
    p.family = family;
    p.alpha_or_ref = a;
    p.exp_d1 = e1;
    p.exp_d2 = e2;
    p.exp_theta_t = e3;
    p.exp_theta_r = e4;
    return p;
}

std::vector<PlObservation> outdoor_grid_data(const ModelParams &truth, double noise_sigma = 0.0,
                                             std::uint64_t seed = 1)
{
    CampaignGrid grid = build_campaign_grid(builtin_campaign(Scenario::Outdoor,
                                                             Mode::IntelligentRis));
    Rng rng(seed);
    std::vector<PlObservation> data;
    data.reserve(grid.points.size());
    for (const auto &p : grid.points)
    {
        double pl = eval_ris_model(truth, p);
        if (noise_sigma > 0.0)
            pl += noise_sigma * rng.normal();
        data.push_back({p, pl});
    }
    return data;
}

FitBounds fi_bounds()
{
    auto d = default_fit_bounds(ModelFamily::FiRis, Scenario::Outdoor);
    return {d.lower, d.upper};
}

FitBounds ci_bounds()
{
    auto d = default_fit_bounds(ModelFamily::CiRis, Scenario::Outdoor);
    return {d.lower, d.upper};
}

} // namespace

TEST_CASE("noiseless forward-model data is recovered to 1e-3")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 20.0, 2.3, 1.9, 1.2, 0.6);
    auto data = outdoor_grid_data(truth);
    FitResult fit = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    CHECK(fit.converged);
    CHECK(std::abs(fit.params.alpha_or_ref - 20.0) < 1e-3);
    CHECK(std::abs(fit.params.exp_d1 - 2.3) < 1e-3);
    CHECK(std::abs(fit.params.exp_d2 - 1.9) < 1e-3);
    CHECK(std::abs(fit.params.exp_theta_t - 1.2) < 1e-3);
    CHECK(std::abs(fit.params.exp_theta_r - 0.6) < 1e-3);
    CHECK(fit.sf_sigma < 1e-6);
}

TEST_CASE("close-in fits keep the intercept bit-frozen")
{
    ModelParams truth = make_params(ModelFamily::CiRis, 21.38, 2.2, 1.8, 1.2, 0.6);
    auto data = outdoor_grid_data(truth);
    FitResult fit = fit_model(data, ModelFamily::CiRis, {}, ci_bounds());

    CHECK(fit.converged);
    CHECK(fit.params.alpha_or_ref == 21.38); // exact, not approximate
    CHECK(fit.bounds_active[0]);
    CHECK(std::abs(fit.params.exp_d1 - 2.2) < 1e-3);
    CHECK(std::abs(fit.params.exp_d2 - 1.8) < 1e-3);

    FitBounds loose = ci_bounds();
    loose.upper[0] = 30.0;
    CHECK_THROWS_AS(fit_model(data, ModelFamily::CiRis, {}, loose), std::invalid_argument);
}

TEST_CASE("injected Gaussian shadow fading is recovered")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 24.0, 2.0, 2.0, 1.0, 1.0);
    auto data = outdoor_grid_data(truth, 2.53, 99);
    REQUIRE(data.size() >= 866);
    FitResult fit = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());
    CHECK(std::abs(fit.sf_sigma - 2.53) / 2.53 < 0.10);

    double mean = 0.0;
    for (double r : fit.residuals)
        mean += r;
    mean /= double(fit.residuals.size());
    CHECK(std::abs(fit.sf_mu - mean) < 1e-6); // sf_mu is the residual mean
    CHECK(std::abs(fit.sf_mu) < 0.3);         // the floating intercept absorbs it
}

TEST_CASE("constant data drives the exponents to their lower bounds")
{
    CampaignGrid grid = build_campaign_grid(builtin_campaign(Scenario::Outdoor,
                                                             Mode::IntelligentRis));
    std::vector<PlObservation> data;
    for (const auto &p : grid.points)
        data.push_back({p, 70.0});

    FitResult fit = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());
    CHECK(std::abs(fit.params.exp_d1 - 1.0) < 1e-4);
    CHECK(std::abs(fit.params.exp_d2 - 1.0) < 1e-4);
    CHECK(fit.bounds_active[1]);
    CHECK(fit.bounds_active[2]);
    CHECK(fit.bounds_active[3]); // angle exponents pushed to 0
    CHECK(fit.bounds_active[4]);
}

TEST_CASE("adding a constant shifts only the floating intercept")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 24.0, 2.1, 1.9, 1.1, 0.8);
    auto data = outdoor_grid_data(truth, 1.0, 5);
    FitResult base = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    double c = 4.5;
    for (auto &obs : data)
        obs.pl_db += c;
    FitResult shifted = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    CHECK(std::abs(shifted.params.alpha_or_ref - base.params.alpha_or_ref - c) < 1e-6);
    CHECK(std::abs(shifted.params.exp_d1 - base.params.exp_d1) < 1e-6);
    CHECK(std::abs(shifted.params.exp_d2 - base.params.exp_d2) < 1e-6);
    CHECK(std::abs(shifted.params.exp_theta_t - base.params.exp_theta_t) < 1e-6);
    CHECK(std::abs(shifted.params.exp_theta_r - base.params.exp_theta_r) < 1e-6);
}

TEST_CASE("dataset order does not change the fit")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 22.0, 2.2, 1.8, 1.3, 0.5);
    auto data = outdoor_grid_data(truth, 2.0, 31);
    FitResult a = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    std::mt19937 shuffler(17);
    std::shuffle(data.begin(), data.end(), shuffler);
    FitResult b = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    CHECK(std::abs(a.params.alpha_or_ref - b.params.alpha_or_ref) < 1e-9);
    CHECK(std::abs(a.params.exp_d1 - b.params.exp_d1) < 1e-9);
    CHECK(std::abs(a.params.exp_d2 - b.params.exp_d2) < 1e-9);
    CHECK(std::abs(a.params.exp_theta_t - b.params.exp_theta_t) < 1e-9);
    CHECK(std::abs(a.params.exp_theta_r - b.params.exp_theta_r) < 1e-9);
}

TEST_CASE("refitting the model's own predictions is a fixed point")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 25.0, 2.4, 1.7, 0.9, 0.7);
    auto data = outdoor_grid_data(truth, 2.0, 8);
    FitResult first = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    std::vector<PlObservation> predicted;
    for (const auto &obs : data)
        predicted.push_back({obs.point, eval_ris_model(first.params, obs.point)});
    FitResult second = fit_model(predicted, ModelFamily::FiRis, {}, fi_bounds());

    CHECK(std::abs(first.params.alpha_or_ref - second.params.alpha_or_ref) < 1e-6);
    CHECK(std::abs(first.params.exp_d1 - second.params.exp_d1) < 1e-6);
    CHECK(std::abs(first.params.exp_theta_r - second.params.exp_theta_r) < 1e-6);
}

TEST_CASE("masked parameters are removed and reported as zero")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 28.0, 1.9, 1.7, 0.0, 0.0);
    VariableMask mask{true, true, false, false};
    truth.mask = mask;

    CampaignGrid grid = build_campaign_grid(builtin_campaign(Scenario::Indoor,
                                                             Mode::IntelligentRis));
    std::vector<PlObservation> data;
    for (const auto &p : grid.points)
        data.push_back({p, eval_ris_model(truth, p)});

    FitResult fit = fit_model(data, ModelFamily::FiRis, mask, fi_bounds());
    CHECK(std::abs(fit.params.alpha_or_ref - 28.0) < 1e-3);
    CHECK(fit.params.exp_theta_t == 0.0);
    CHECK(fit.params.exp_theta_r == 0.0);
}

TEST_CASE("under-determined datasets are rejected")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 20.0, 2.0, 2.0, 1.0, 1.0);
    auto data = outdoor_grid_data(truth);
    data.resize(3); // five free parameters
    CHECK_THROWS_AS(fit_model(data, ModelFamily::FiRis, {}, fi_bounds()),
                    std::invalid_argument);
}

TEST_CASE("shadow fading statistics")
{
    auto zero = shadow_fading_stats({0.0, 0.0, 0.0});
    CHECK(zero.mu == 0.0);
    CHECK(zero.sigma == 0.0);

    auto two = shadow_fading_stats({-1.0, 1.0});
    CHECK(two.mu == doctest::Approx(0.0));
    CHECK(two.sigma == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    Rng rng(12);
    std::vector<double> sample;
    for (int i = 0; i < 866; ++i)
        sample.push_back(2.53 * rng.normal());
    auto stats = shadow_fading_stats(sample);
    CHECK(std::abs(stats.sigma - 2.53) / 2.53 < 0.10);
    CHECK(stats.cdf_samples.size() == sample.size());
    CHECK(std::is_sorted(stats.cdf_samples.begin(), stats.cdf_samples.end()));
}

TEST_CASE("goodness report on holdouts")
{
    ModelParams truth = make_params(ModelFamily::FiRis, 23.0, 2.1, 1.9, 1.0, 0.9);
    auto data = outdoor_grid_data(truth);
    FitResult fit = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());

    GoodnessReport perfect = goodness_report(fit, data);
    CHECK(perfect.rmse < 1e-6);

    auto biased = data;
    for (auto &obs : biased)
        obs.pl_db += 1.25;
    GoodnessReport shifted = goodness_report(fit, biased);
    CHECK(shifted.mean_error == doctest::Approx(1.25).epsilon(1e-6));

    CHECK_THROWS_AS(goodness_report(fit, {}), std::invalid_argument);
}

TEST_CASE("FI and CI deliver similar accuracy on the same free-space-style data")
{
    // data exactly at the free-space exponents with mild scatter
    ModelParams truth = make_params(ModelFamily::CiRis, 21.38, 2.0, 2.0, 1.0, 1.0);
    auto data = outdoor_grid_data(truth, 1.0, 55);

    FitResult fi = fit_model(data, ModelFamily::FiRis, {}, fi_bounds());
    FitResult ci = fit_model(data, ModelFamily::CiRis, {}, ci_bounds());
    GoodnessReport fi_rep = goodness_report(fi, data);
    GoodnessReport ci_rep = goodness_report(ci, data);
    CHECK(std::abs(fi_rep.rmse - ci_rep.rmse) < 0.5);
}
