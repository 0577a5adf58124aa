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

#include "rischan/synthesis.hpp"

#include "rischan/reference_tables.hpp"
#include "rischan/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 2.0 * pi;
constexpr double speed_of_light = 299792458.0;

double deg2rad(double d) { return d * pi / 180.0; }

BeamTarget target_of(const MeasurementPoint &p)
{
    return {p.d1, p.d2, p.eaoa_t, p.eaod_r};
}

// Exponential tail behind the dominant path. Tail fraction r and decay gamma
// give rms ~= gamma * sqrt(r (2 - r)); gamma is chosen from the published
// per-scenario delay-spread means. Qualitative realism only.
void append_multipath_tail(std::vector<PathRecord> &paths, const MeasurementPoint &point,
                           const SynthesisConfig &config, Rng &rng)
{
    double tail_fraction;
    switch (point.mode)
    {
    case Mode::IntelligentRis:
        tail_fraction = 0.05;
        break;
    case Mode::SpecularRis:
        tail_fraction = 0.15;
        break;
    default:
        tail_fraction = 0.5;
        break;
    }

    double target_s = rms_ds_target_ns(point.scenario, point.mode) * 1e-9;
    double gamma = target_s / std::sqrt(tail_fraction * (2.0 - tail_fraction));

    const PathRecord &dominant = paths.front();
    double p0 = dominant.amplitude * dominant.amplitude;
    double tail_power = p0 * tail_fraction / (1.0 - tail_fraction);

    constexpr int n_taps = 24;
    double spacing = 1.0 / (config.f_stop - config.f_start);
    double weight_sum = 0.0;
    for (int i = 1; i <= n_taps; ++i)
        weight_sum += std::exp(-double(i) * spacing / gamma);
    for (int i = 1; i <= n_taps; ++i)
    {
        PathRecord tap;
        tap.delay_s = dominant.delay_s + double(i) * spacing;
        tap.amplitude =
            std::sqrt(tail_power * std::exp(-double(i) * spacing / gamma) / weight_sum);
        tap.phase_rad = rng.uniform(0.0, two_pi);
        paths.push_back(tap);
    }
}

} // namespace

void SynthesisConfig::validate() const
{
    if (k < 2)
        throw std::invalid_argument("synthesis: k must be >= 2");
    if (!(f_stop > f_start))
        throw std::invalid_argument("synthesis: f_stop must exceed f_start");
    if (shadow_sigma_db < 0.0)
        throw std::invalid_argument("synthesis: shadow sigma must be >= 0");
}

double free_space_pl_raw_db(double d1_m, double d2_m, double theta_t_deg, double theta_r_deg,
                            const RisConfiguration &ris, double gt_dbi, double gr_dbi,
                            double unit_amplitude)
{
    if (!(d1_m > 0.0) || !(d2_m > 0.0))
        throw std::domain_error("free_space_pl: distances must be > 0");
    if (!(theta_t_deg > -90.0 && theta_t_deg < 90.0) ||
        !(theta_r_deg > -90.0 && theta_r_deg < 90.0))
        throw std::domain_error("free_space_pl: grazing angle, cos(theta) not positive");
    double ct = std::cos(deg2rad(theta_t_deg));
    double cr = std::cos(deg2rad(theta_r_deg));

    double gt = std::pow(10.0, gt_dbi / 10.0);
    double gr = std::pow(10.0, gr_dbi / 10.0);
    double aperture = double(ris.cell_count()) * ris.dx * ris.dy;
    double num = 16.0 * pi * pi * (d1_m * d2_m) * (d1_m * d2_m);
    double den = gt * gr * aperture * aperture * ct * cr * unit_amplitude * unit_amplitude;
    return 10.0 * std::log10(num / den);
}

double calibration_offset_db(const RisConfiguration &ris, double gt_dbi, double gr_dbi,
                             double unit_amplitude)
{
    return reference_path_loss_db -
           free_space_pl_raw_db(1.0, 1.0, 0.0, 0.0, ris, gt_dbi, gr_dbi, unit_amplitude);
}

double free_space_pl_ris_db(double d1_m, double d2_m, double theta_t_deg, double theta_r_deg,
                            const RisConfiguration &ris, double gt_dbi, double gr_dbi,
                            double unit_amplitude)
{
    return free_space_pl_raw_db(d1_m, d2_m, theta_t_deg, theta_r_deg, ris, gt_dbi, gr_dbi,
                                unit_amplitude) +
           calibration_offset_db(ris, gt_dbi, gr_dbi, unit_amplitude);
}

double quantization_penalty_db(const MeasurementPoint &point, const RisConfiguration &ris,
                               const SynthesisConfig &config)
{
    auto profile = ideal_phase_profile(point, ris, ris.center_frequency);
    double gain;
    if (config.sweep_threshold)
        gain = best_threshold_codebook(profile, ris, target_of(point)).gain_db;
    else
        gain = array_factor_gain_db(quantize_codebook(profile, ris, 0.0, target_of(point)),
                                    profile, ris);
    return -gain;
}

double mode_pl_offset_db(Mode mode, const MeasurementPoint &point, const RisConfiguration &ris,
                         const SynthesisConfig &config)
{
    switch (mode)
    {
    case Mode::IntelligentRis:
        return 0.0;
    case Mode::SpecularRis:
    {
        auto profile = ideal_phase_profile(point, ris, ris.center_frequency);
        double uniform_gain = array_factor_gain_db(uniform_codebook(ris, 0, target_of(point)),
                                                   profile, ris);
        // deficit of the uniform panel against the designed codebook
        return -quantization_penalty_db(point, ris, config) - uniform_gain;
    }
    case Mode::WithoutRis:
        return config.without_ris_excess_db;
    }
    throw std::invalid_argument("mode_pl_offset: unknown mode");
}

double dominant_path_pl_db(const MeasurementPoint &point, const RisConfiguration &ris,
                           const SynthesisConfig &config)
{
    double fs = free_space_pl_ris_db(point.d1, point.d2, point.eaoa_t, point.eaod_r, ris,
                                     config.gt_dbi, config.gr_dbi);
    if (point.mode == Mode::WithoutRis)
        return fs + config.without_ris_excess_db;
    return fs + quantization_penalty_db(point, ris, config) +
           mode_pl_offset_db(point.mode, point, ris, config);
}

FrequencySweep synth_sweep_from_paths(const std::vector<PathRecord> &paths,
                                      const SynthesisConfig &config, const std::string &point_ref)
{
    config.validate();
    for (const auto &p : paths)
        if (p.delay_s < 0.0 || p.amplitude < 0.0)
            throw std::invalid_argument("synth_sweep: path delay and amplitude must be >= 0");

    FrequencySweep sweep = make_sweep_frame(config.k, config.f_start, config.f_stop);
    sweep.point_ref = point_ref;
    for (std::size_t i = 0; i < config.k; ++i)
    {
        double f = sweep.frequency_at(i);
        std::complex<double> acc = 0.0;
        for (const auto &p : paths)
            acc += std::polar(p.amplitude, p.phase_rad - two_pi * f * p.delay_s);
        sweep.samples[i] = acc;
    }
    return sweep;
}

double shadow_fading_draw_db(const MeasurementPoint &point, const SynthesisConfig &config)
{
    if (config.shadow_sigma_db == 0.0)
        return 0.0;
    Rng rng(substream_seed(config.seed, point.point_id));
    return rng.normal() * config.shadow_sigma_db;
}

FrequencySweep synth_sweep(const MeasurementPoint &point, const SynthesisConfig &config,
                           const RisConfiguration &ris)
{
    config.validate();
    validate(point);
    ris.validate();

    Rng rng(substream_seed(config.seed, point.point_id));

    double pl = dominant_path_pl_db(point, ris, config);
    if (config.shadow_sigma_db > 0.0)
        pl += rng.normal() * config.shadow_sigma_db;
    else
        rng.normal(); // keep the draw sequence identical with fading off

    // amplitude chosen so the processing chain reports exactly this pl
    double amplitude = std::pow(10.0, (config.gt_dbi + config.gr_dbi - pl) / 20.0);

    std::vector<PathRecord> paths;
    paths.push_back({(point.d1 + point.d2) / speed_of_light, amplitude, 0.0});
    if (config.multipath)
        append_multipath_tail(paths, point, config, rng);

    FrequencySweep sweep = synth_sweep_from_paths(paths, config, point.point_id);

    if (std::isfinite(config.noise_rel_db))
    {
        double sigma = amplitude * std::pow(10.0, config.noise_rel_db / 20.0);
        for (auto &s : sweep.samples)
            s += std::complex<double>(rng.normal(), rng.normal()) * (sigma / std::sqrt(2.0));
    }
    return sweep;
}

}
