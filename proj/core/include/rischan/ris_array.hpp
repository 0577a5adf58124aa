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

#ifndef RISCHAN_RIS_ARRAY_HPP
#define RISCHAN_RIS_ARRAY_HPP

#include "rischan/geometry.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace rischan {

// Measured coding-state responses at one frequency, for panels whose
// response curves are tabulated rather than taken as in-band constants.
struct StateResponseSample
{
    double frequency_hz;
    std::complex<double> state0;
    std::complex<double> state1;
};

// 1-bit reflective panel: m_rows x n_cols unit cells, two programmable
// coding states per cell. Rows are stacked vertically, columns run along
// the horizontal cut in which Tx and Rx move.
struct RisConfiguration
{
    std::size_t m_rows = 32;
    std::size_t n_cols = 16;
    double dx = 0.05; // cell pitch along a row [m]
    double dy = 0.05; // cell pitch along a column [m]
    std::complex<double> state0; // coding "0" reflection coefficient (in-band average)
    std::complex<double> state1; // coding "1" reflection coefficient (in-band average)
    double center_frequency = 2.6e9;
    // optional tabulated response curves, sorted by frequency; empty = use
    // the constant averages everywhere
    std::vector<StateResponseSample> response_table;

    std::size_t cell_count() const { return m_rows * n_cols; }
    double max_state_magnitude() const;
    // linear interpolation into the table, clamped at its ends
    std::complex<double> state0_at(double frequency_hz) const;
    std::complex<double> state1_at(double frequency_hz) const;
    void validate() const; // throws std::invalid_argument
};

// The deployed 32x16 panel: 0.75 dB / 55 deg for coding "0",
// 0.25 dB / -125 deg for coding "1" (in-band averages).
RisConfiguration default_ris();

// Synthetic panel with equal unit-magnitude states, for quantization studies.
RisConfiguration synthetic_ris(std::size_t rows, std::size_t cols, double pitch = 0.05,
                               double frequency = 2.6e9);

// Row-major M x N matrix of per-cell propagation phases in [0, 2*pi).
struct PhaseProfile
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> phase;

    double at(std::size_t r, std::size_t c) const { return phase[r * cols + c]; }
};

struct BeamTarget
{
    double d1 = 0.0;
    double d2 = 0.0;
    double theta_t = 0.0; // [deg]
    double theta_r = 0.0; // [deg]
};

// Binary coding matrix for one beam target.
struct Codebook
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> bits; // row-major, 0 or 1
    BeamTarget target;
    double threshold = 0.0; // quantizer boundary offset used [rad]

    std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * cols + c]; }
};

// Per-cell phase accumulated over the Tx-cell and cell-Rx paths at the given
// frequency, with Tx/Rx placed from (d1, theta_t)/(d2, theta_r) in the
// panel's horizontal cut. Exact cell distances, so near-field curvature is
// retained.
PhaseProfile ideal_phase_profile(const MeasurementPoint &point, const RisConfiguration &ris,
                                 double frequency_hz);

// 1-bit quantization: per cell, pick the coding state whose response phase
// is circularly closer to the compensation phase (the negated profile), with
// the decision boundary rotated by `threshold`. Ties go to state 0.
Codebook quantize_codebook(const PhaseProfile &profile, const RisConfiguration &ris,
                           double threshold = 0.0, const BeamTarget &target = {});

Codebook uniform_codebook(const RisConfiguration &ris, std::uint8_t state,
                          const BeamTarget &target = {});

Codebook complement(const Codebook &cb);

// Coherent-sum gain of a codebook against a phase profile, in dB, normalized
// so that ideal continuous-phase compensation at the stronger state magnitude
// is 0 dB. Always <= 0.
double array_factor_gain_db(const Codebook &cb, const PhaseProfile &profile,
                            const RisConfiguration &ris);

// Convenience: profile recomputed from the point geometry.
double array_factor_gain_db(const Codebook &cb, const MeasurementPoint &point,
                            const RisConfiguration &ris, double frequency_hz);

struct ThresholdSweepResult
{
    double threshold = 0.0;
    double gain_db = 0.0;
    Codebook codebook;
};

// Exact sweep over every quantizer-reachable codebook: walks the sorted
// per-cell flip events and keeps the threshold with the highest array-factor
// gain. Plays the role of the dynamic-threshold codebook design used on the
// deployed panel.
ThresholdSweepResult best_threshold_codebook(const PhaseProfile &profile,
                                             const RisConfiguration &ris,
                                             const BeamTarget &target = {});

}

#endif
