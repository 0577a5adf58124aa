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

#ifndef RISCHAN_SYNTHESIS_HPP
#define RISCHAN_SYNTHESIS_HPP

#include "rischan/geometry.hpp"
#include "rischan/ris_array.hpp"
#include "rischan/sweep.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace rischan {

// Free-space level of the cascaded link at the close-in reference
// (1 m, 1 m, 0 deg, 0 deg).
inline constexpr double reference_path_loss_db = 21.38;

// Cascaded free-space path loss before calibration:
// 10*log10(16*pi^2 (d1 d2)^2 / (Gt Gr (M N dx dy)^2 cos(theta_t) cos(theta_r) A^2)).
// Throws std::domain_error for grazing angles or non-positive distances.
double free_space_pl_raw_db(double d1_m, double d2_m, double theta_t_deg, double theta_r_deg,
                            const RisConfiguration &ris, double gt_dbi = 8.25,
                            double gr_dbi = 8.25, double unit_amplitude = 1.0);

// Additive constant that places the raw model at reference_path_loss_db for
// the close-in reference point. Reported separately in outputs so the
// generator convention is always visible.
double calibration_offset_db(const RisConfiguration &ris, double gt_dbi = 8.25,
                             double gr_dbi = 8.25, double unit_amplitude = 1.0);

// Calibrated free-space path loss (raw + offset).
double free_space_pl_ris_db(double d1_m, double d2_m, double theta_t_deg, double theta_r_deg,
                            const RisConfiguration &ris, double gt_dbi = 8.25,
                            double gr_dbi = 8.25, double unit_amplitude = 1.0);

// One propagation path of the synthetic channel.
struct PathRecord
{
    double delay_s = 0.0;
    double amplitude = 0.0; // linear magnitude
    double phase_rad = 0.0;
};

struct SynthesisConfig
{
    std::uint64_t seed = 1;
    std::size_t k = 191;
    double f_start = 2.5e9;
    double f_stop = 2.69e9;
    double gt_dbi = 8.25;
    double gr_dbi = 8.25;
    double shadow_sigma_db = 0.0;        // per-point lognormal shadow fading
    double without_ris_excess_db = 25.0; // blocked-path excess over the free-space level
    bool sweep_threshold = true;         // design intelligent codebooks by threshold sweep
    bool multipath = false;              // append the scenario/mode tail template
    // VNA noise relative to the dominant path; -inf disables it
    double noise_rel_db = -std::numeric_limits<double>::infinity();

    void validate() const; // throws std::invalid_argument
};

// Loss of the mode's actual panel configuration against ideal continuous
// compensation at the point: the swept 1-bit codebook for intelligent
// reflection, the uniform coding-0 panel for specular reflection.
double quantization_penalty_db(const MeasurementPoint &point, const RisConfiguration &ris,
                               const SynthesisConfig &config);

// Extra loss of the propagation mode over the intelligent-reflection model:
// 0 for intelligent reflection, the all-coding-0 array-factor deficit for
// specular reflection, a configurable blocked-path excess without the panel.
double mode_pl_offset_db(Mode mode, const MeasurementPoint &point, const RisConfiguration &ris,
                         const SynthesisConfig &config);

// Dominant-path level for the point under its mode: calibrated free-space
// loss plus the panel and mode terms (shadow fading excluded).
double dominant_path_pl_db(const MeasurementPoint &point, const RisConfiguration &ris,
                           const SynthesisConfig &config);

// Sum of amplitude * exp(j phase) * exp(-j 2 pi f delay) over paths, sampled
// on the sweep grid.
FrequencySweep synth_sweep_from_paths(const std::vector<PathRecord> &paths,
                                      const SynthesisConfig &config,
                                      const std::string &point_ref = {});

// Full per-point synthesis: dominant path from the mode model, one shadow
// fading draw per point, optional multipath tail and VNA noise. Identical
// (seed, point) pairs produce bit-identical sweeps regardless of grid order.
FrequencySweep synth_sweep(const MeasurementPoint &point, const SynthesisConfig &config,
                           const RisConfiguration &ris);

// The shadow fading realization used by synth_sweep for this point [dB].
double shadow_fading_draw_db(const MeasurementPoint &point, const SynthesisConfig &config);

}

#endif
