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

#ifndef RISCHAN_DSP_HPP
#define RISCHAN_DSP_HPP

#include "rischan/sweep.hpp"

namespace rischan {

// Sweep-to-PL, CIR, PDP, valid-MPC and delay-spread chain. All transforms
// are stateless; applying them in parallel across sweeps is safe.

inline constexpr double default_gamma_p_db = 60.0; // gate below the PDP peak
inline constexpr double default_gamma_n_db = 15.0; // gate above the noise floor
inline constexpr double default_antenna_gain_dbi = 8.25;

struct Mpc
{
    double delay_s = 0.0;
    double power_db = 0.0;
};

// Delay-binned power sequence. Bin l carries delay l * delay_resolution with
// delay_resolution the inverse of the swept bandwidth.
struct PowerDelayProfile
{
    std::vector<double> powers_db;
    double delay_resolution = 0.0; // [s]
    double noise_floor_db = 0.0;   // median power of the last quarter of bins
    double threshold_db = 0.0;     // set by detect_mpcs
    std::vector<Mpc> valid_mpcs;   // set by detect_mpcs

    double delay_at(std::size_t bin) const { return double(bin) * delay_resolution; }
};

struct PathLossResult
{
    double pl_db = 0.0;     // reported path loss (positive for lossy channels)
    double raw_db = 0.0;    // mean-power estimate before negation
};

// Removes the system response per frequency bin: H = H_V / G. Throws
// std::invalid_argument naming the first zero-magnitude calibration bin.
FrequencySweep calibrate(const FrequencySweep &raw, const CalibrationProfile &cal);

// raw = 10*log10(mean_k |H_k|^2) - gt - gr; pl = -raw. The negation keeps
// reported path loss positive for lossy channels.
PathLossResult path_loss(const FrequencySweep &sweep, double gt_dbi = default_antenna_gain_dbi,
                         double gr_dbi = default_antenna_gain_dbi);

// Hann window across the K samples followed by an inverse DFT with 1/K
// normalization; output length K. With this normalization the CIR energy
// equals the mean window-weighted CTF power.
std::vector<std::complex<double>> ctf_to_cir(const FrequencySweep &sweep);

// Squared-magnitude CIR in dB with delay-grid metadata and the estimated
// noise floor. Threshold / MPC fields are left for detect_mpcs.
PowerDelayProfile compute_pdp(const FrequencySweep &sweep);

// Display-only variant on a zero-padded delay grid (factor-times finer
// bins). The processing chain itself stays on the unpadded K-bin grid.
PowerDelayProfile oversampled_pdp(const FrequencySweep &sweep, std::size_t factor);

// Valid multipath components: bins with power >= max(P_max - gamma_p,
// N_0 + gamma_n), in delay order. Also stored on the profile.
std::vector<Mpc> detect_mpcs(PowerDelayProfile &pdp, double gamma_p_db = default_gamma_p_db,
                             double gamma_n_db = default_gamma_n_db);

// Power-weighted second central moment root of the MPC delays (powers
// converted to linear internally). Throws std::invalid_argument on an empty
// list.
double rms_delay_spread(const std::vector<Mpc> &mpcs);

// B_c = 1 / (k_factor * rms_ds); k = 50 is the usual 50 %-correlation
// constant. Throws std::domain_error for rms_ds <= 0.
double coherence_bandwidth(double rms_ds_s, double k_factor = 50.0);

}

#endif
