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

#include "rischan/dsp.hpp"
#include "rischan/rng.hpp"
#include "rischan/synthesis.hpp"

#include <cmath>
#include <stdexcept>

using namespace rischan;

namespace {

constexpr double two_pi = 6.28318530717958647692528676656;

MeasurementPoint point_at(double d1, double d2, double tt, double tr,
                          Mode mode = Mode::IntelligentRis, const std::string &id = "pt")
{
    return {d1, d2, tt, 180.0, tr, 0.0, Scenario::Outdoor, mode, id};
}

double normal_cdf(double x, double mu, double sigma)
{
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

} // namespace

TEST_CASE("calibrated free-space level hits the close-in reference")
{
    RisConfiguration ris = default_ris();
    CHECK(free_space_pl_ris_db(1.0, 1.0, 0.0, 0.0, ris) ==
          doctest::Approx(21.38).epsilon(1e-12));
    // the additive reconciliation constant, reported separately
    CHECK(std::abs(calibration_offset_db(ris) - 18.04) < 1e-3);
}

TEST_CASE("free-space level scales with the square law and the angle cosines")
{
    RisConfiguration ris = default_ris();
    double base = free_space_pl_ris_db(1.0, 1.0, 0.0, 0.0, ris);
    CHECK(free_space_pl_ris_db(2.0, 1.0, 0.0, 0.0, ris) - base ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK(free_space_pl_ris_db(1.0, 1.0, 60.0, 0.0, ris) - base ==
          doctest::Approx(-10.0 * std::log10(0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(free_space_pl_ris_db(1.0, 1.0, 90.0, 0.0, ris), std::domain_error);
    CHECK_THROWS_AS(free_space_pl_ris_db(0.0, 1.0, 0.0, 0.0, ris), std::domain_error);
}

TEST_CASE("single zero-delay path gives a flat sweep")
{
    SynthesisConfig cfg;
    FrequencySweep s = synth_sweep_from_paths({{0.0, 0.7, 0.3}}, cfg);
    for (const auto &v : s.samples)
        CHECK(std::abs(std::abs(v) - 0.7) < 1e-14);
}

TEST_CASE("two equal paths interfere with the closed-form ripple")
{
    SynthesisConfig cfg;
    double dtau = 40e-9;
    double a = 0.5;
    FrequencySweep s = synth_sweep_from_paths({{0.0, a, 0.0}, {dtau, a, 0.0}}, cfg);
    for (std::size_t i = 0; i < s.k(); ++i)
    {
        double f = s.frequency_at(i);
        double expected = 2.0 * a * a * (1.0 + std::cos(two_pi * f * dtau));
        CHECK(std::norm(s.samples[i]) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("same seed and point give bit-identical sweeps")
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;
    cfg.seed = 77;
    cfg.shadow_sigma_db = 2.53;
    cfg.multipath = true;
    cfg.noise_rel_db = -45.0;

    MeasurementPoint p = point_at(6, 8, 45, 45);
    FrequencySweep a = synth_sweep(p, cfg, ris);
    FrequencySweep b = synth_sweep(p, cfg, ris);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i] == b.samples[i]);

    cfg.seed = 78;
    FrequencySweep c = synth_sweep(p, cfg, ris);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        any_diff = any_diff || a.samples[i] != c.samples[i];
    CHECK(any_diff);
}

TEST_CASE("processing a synthesized sweep recovers the synthesized path loss")
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;
    for (Mode mode : {Mode::IntelligentRis, Mode::SpecularRis, Mode::WithoutRis})
    {
        MeasurementPoint p = point_at(9, 7, 45, 45, mode);
        double target = dominant_path_pl_db(p, ris, cfg);
        FrequencySweep s = synth_sweep(p, cfg, ris);
        CHECK(std::abs(path_loss(s, cfg.gt_dbi, cfg.gr_dbi).pl_db - target) < 0.01);
    }
}

TEST_CASE("intelligent reflection never loses to the uniform panel at its own target")
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;
    for (double d1 : {5.0, 9.0, 14.0})
        for (double d2 : {5.0, 11.0, 18.0})
            for (double theta : {30.0, 45.0, 60.0})
            {
                MeasurementPoint pi = point_at(d1, d2, theta, theta, Mode::IntelligentRis);
                MeasurementPoint ps = point_at(d1, d2, theta, theta, Mode::SpecularRis);
                CHECK(dominant_path_pl_db(pi, ris, cfg) <=
                      dominant_path_pl_db(ps, ris, cfg) + 1e-9);
            }
}

TEST_CASE("mode offsets behave as designed")
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;

    MeasurementPoint p = point_at(6, 8, 45, 45);
    CHECK(mode_pl_offset_db(Mode::IntelligentRis, p, ris, cfg) == 0.0);
    CHECK(mode_pl_offset_db(Mode::WithoutRis, p, ris, cfg) == 25.0);

    // mismatched angles in the near field: the uniform panel pays heavily
    MeasurementPoint mismatched = point_at(6, 6, 45, 30, Mode::SpecularRis);
    CHECK(mode_pl_offset_db(Mode::SpecularRis, mismatched, ris, cfg) > 3.0);

    // matched specular geometry, receiver pushed far out: the offset decays
    double near = mode_pl_offset_db(Mode::SpecularRis, point_at(18, 5, 45, 45), ris, cfg);
    double far = mode_pl_offset_db(Mode::SpecularRis, point_at(18, 1000, 45, 45), ris, cfg);
    CHECK(far < near);
    CHECK(far < 0.6);
}

TEST_CASE("shadow fading draws pass a normality check at the configured sigma")
{
    SynthesisConfig cfg;
    cfg.seed = 4242;
    cfg.shadow_sigma_db = 2.53;

    std::vector<double> draws;
    for (int i = 0; i < 196; ++i)
        draws.push_back(shadow_fading_draw_db(
            point_at(5, 5, 45, 45, Mode::IntelligentRis, "sf-" + std::to_string(i)), cfg));

    std::sort(draws.begin(), draws.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < draws.size(); ++i)
    {
        double model = normal_cdf(draws[i], 0.0, 2.53);
        double hi = double(i + 1) / double(draws.size());
        double lo = double(i) / double(draws.size());
        ks = std::max(ks, std::max(std::abs(model - hi), std::abs(model - lo)));
    }
    // 5 % Kolmogorov-Smirnov bound for n = 196
    CHECK(ks < 1.358 / std::sqrt(196.0));
}

TEST_CASE("multipath tail stays subordinate to the dominant path")
{
    RisConfiguration ris = default_ris();
    SynthesisConfig cfg;
    cfg.multipath = true;

    MeasurementPoint p = point_at(6, 8, 45, 45, Mode::IntelligentRis);
    FrequencySweep s = synth_sweep(p, cfg, ris);
    PowerDelayProfile pdp = compute_pdp(s);
    auto mpcs = detect_mpcs(pdp);
    CHECK(mpcs.size() > 1); // the tail is visible
    double rms = rms_delay_spread(mpcs);
    CHECK(rms > 0.0);
    CHECK(rms < 60e-9); // bounded by the template scale
}

TEST_CASE("config validation")
{
    SynthesisConfig cfg;
    cfg.k = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.shadow_sigma_db = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.f_stop = cfg.f_start;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
