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

#include "rischan/ris_array.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 2.0 * pi;
constexpr double speed_of_light = 299792458.0;

double deg2rad(double d) { return d * pi / 180.0; }

// wrap into (-pi, pi]
double wrap_pi(double x)
{
    double y = std::fmod(x + pi, two_pi);
    if (y <= 0.0)
        y += two_pi;
    return y - pi;
}

std::complex<double> polar_db_loss(double loss_db, double phase_deg)
{
    return std::polar(std::pow(10.0, -loss_db / 20.0), deg2rad(phase_deg));
}

} // namespace

double RisConfiguration::max_state_magnitude() const
{
    return std::max(std::abs(state0), std::abs(state1));
}

namespace {

std::complex<double> interpolate_response(const std::vector<StateResponseSample> &table,
                                          double frequency_hz, bool state_one,
                                          std::complex<double> fallback)
{
    if (table.empty())
        return fallback;
    auto pick = [state_one](const StateResponseSample &s) {
        return state_one ? s.state1 : s.state0;
    };
    if (frequency_hz <= table.front().frequency_hz)
        return pick(table.front());
    if (frequency_hz >= table.back().frequency_hz)
        return pick(table.back());
    for (std::size_t i = 1; i < table.size(); ++i)
    {
        if (frequency_hz > table[i].frequency_hz)
            continue;
        double span = table[i].frequency_hz - table[i - 1].frequency_hz;
        double t = span > 0.0 ? (frequency_hz - table[i - 1].frequency_hz) / span : 0.0;
        return pick(table[i - 1]) * (1.0 - t) + pick(table[i]) * t;
    }
    return pick(table.back());
}

} // namespace

std::complex<double> RisConfiguration::state0_at(double frequency_hz) const
{
    return interpolate_response(response_table, frequency_hz, false, state0);
}

std::complex<double> RisConfiguration::state1_at(double frequency_hz) const
{
    return interpolate_response(response_table, frequency_hz, true, state1);
}

void RisConfiguration::validate() const
{
    if (m_rows == 0 || n_cols == 0)
        throw std::invalid_argument("ris: empty panel");
    if (!(dx > 0.0) || !(dy > 0.0))
        throw std::invalid_argument("ris: cell pitch must be > 0");
    if (!(center_frequency > 0.0))
        throw std::invalid_argument("ris: center frequency must be > 0");
    if (std::abs(state0) > 1.0 + 1e-12 || std::abs(state1) > 1.0 + 1e-12)
        throw std::invalid_argument("ris: passive reflection requires |state| <= 1");
    double diff = wrap_pi(std::arg(state0) - std::arg(state1) - pi);
    if (std::abs(diff) > 1e-9)
        throw std::invalid_argument("ris: coding states must be 180 deg apart");
    for (std::size_t i = 0; i < response_table.size(); ++i)
    {
        if (std::abs(response_table[i].state0) > 1.0 + 1e-12 ||
            std::abs(response_table[i].state1) > 1.0 + 1e-12)
            throw std::invalid_argument("ris: tabulated responses must stay passive");
        if (i > 0 &&
            !(response_table[i].frequency_hz > response_table[i - 1].frequency_hz))
            throw std::invalid_argument("ris: response table must be sorted by frequency");
    }
}

RisConfiguration default_ris()
{
    RisConfiguration ris;
    ris.state0 = polar_db_loss(0.75, 55.0);
    ris.state1 = polar_db_loss(0.25, -125.0);
    return ris;
}

RisConfiguration synthetic_ris(std::size_t rows, std::size_t cols, double pitch, double frequency)
{
    RisConfiguration ris;
    ris.m_rows = rows;
    ris.n_cols = cols;
    ris.dx = ris.dy = pitch;
    ris.state0 = std::polar(1.0, deg2rad(55.0));
    ris.state1 = std::polar(1.0, deg2rad(-125.0));
    ris.center_frequency = frequency;
    return ris;
}

PhaseProfile ideal_phase_profile(const MeasurementPoint &point, const RisConfiguration &ris,
                                 double frequency_hz)
{
    if (!(frequency_hz > 0.0))
        throw std::invalid_argument("ideal_phase_profile: frequency must be > 0");
    validate(point);

    double k = two_pi * frequency_hz / speed_of_light;
    double tt = deg2rad(point.eaoa_t);
    double tr = deg2rad(point.eaod_r);

    // Panel in the x = 0 plane, normal +x. Tx sits on the azimuth-180 side of
    // the cut, Rx on the azimuth-0 side, both at the panel-center height.
    double tx_x = point.d1 * std::cos(tt), tx_u = -point.d1 * std::sin(tt);
    double rx_x = point.d2 * std::cos(tr), rx_u = point.d2 * std::sin(tr);

    PhaseProfile profile;
    profile.rows = ris.m_rows;
    profile.cols = ris.n_cols;
    profile.phase.resize(ris.cell_count());

    for (std::size_t m = 0; m < ris.m_rows; ++m)
    {
        double v = (double(m) - (double(ris.m_rows) - 1.0) / 2.0) * ris.dy; // vertical
        for (std::size_t n = 0; n < ris.n_cols; ++n)
        {
            double u = (double(n) - (double(ris.n_cols) - 1.0) / 2.0) * ris.dx; // in-cut
            double rt = std::sqrt(tx_x * tx_x + (u - tx_u) * (u - tx_u) + v * v);
            double rr = std::sqrt(rx_x * rx_x + (u - rx_u) * (u - rx_u) + v * v);
            double ph = std::fmod(k * (rt + rr), two_pi);
            if (ph < 0.0)
                ph += two_pi;
            profile.phase[m * ris.n_cols + n] = ph;
        }
    }
    return profile;
}

Codebook quantize_codebook(const PhaseProfile &profile, const RisConfiguration &ris,
                           double threshold, const BeamTarget &target)
{
    if (profile.rows != ris.m_rows || profile.cols != ris.n_cols)
        throw std::invalid_argument("quantize_codebook: profile does not match panel dimensions");

    Codebook cb;
    cb.rows = profile.rows;
    cb.cols = profile.cols;
    cb.target = target;
    cb.threshold = threshold;
    cb.bits.resize(profile.phase.size());

    double ph0 = std::arg(ris.state0);
    for (std::size_t i = 0; i < profile.phase.size(); ++i)
    {
        // compensation phase the cell should apply, relative to state 0
        double diff = wrap_pi(-profile.phase[i] - ph0 - threshold);
        cb.bits[i] = (std::abs(diff) <= pi / 2.0) ? 0 : 1;
    }
    return cb;
}

Codebook uniform_codebook(const RisConfiguration &ris, std::uint8_t state, const BeamTarget &target)
{
    Codebook cb;
    cb.rows = ris.m_rows;
    cb.cols = ris.n_cols;
    cb.target = target;
    cb.bits.assign(ris.cell_count(), state ? 1 : 0);
    return cb;
}

Codebook complement(const Codebook &cb)
{
    Codebook out = cb;
    for (auto &b : out.bits)
        b = b ? 0 : 1;
    return out;
}

namespace {

double array_factor_with_states(const Codebook &cb, const PhaseProfile &profile,
                                const RisConfiguration &ris, std::complex<double> s0,
                                std::complex<double> s1)
{
    if (cb.rows != profile.rows || cb.cols != profile.cols || cb.rows != ris.m_rows ||
        cb.cols != ris.n_cols)
        throw std::invalid_argument("array_factor_gain: codebook/profile/panel dimension mismatch");

    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < cb.bits.size(); ++i)
        sum += (cb.bits[i] ? s1 : s0) * std::polar(1.0, profile.phase[i]);
    double norm = double(ris.cell_count()) * std::max(std::abs(s0), std::abs(s1));
    return 20.0 * std::log10(std::abs(sum) / norm);
}

} // namespace

double array_factor_gain_db(const Codebook &cb, const PhaseProfile &profile,
                            const RisConfiguration &ris)
{
    return array_factor_with_states(cb, profile, ris, ris.state0, ris.state1);
}

double array_factor_gain_db(const Codebook &cb, const MeasurementPoint &point,
                            const RisConfiguration &ris, double frequency_hz)
{
    // tabulated response curves, when present, are honored at the requested
    // frequency
    return array_factor_with_states(cb, ideal_phase_profile(point, ris, frequency_hz), ris,
                                    ris.state0_at(frequency_hz), ris.state1_at(frequency_hz));
}

ThresholdSweepResult best_threshold_codebook(const PhaseProfile &profile,
                                             const RisConfiguration &ris, const BeamTarget &target)
{
    const std::size_t n = profile.phase.size();
    if (profile.rows != ris.m_rows || profile.cols != ris.n_cols)
        throw std::invalid_argument("best_threshold_codebook: profile/panel dimension mismatch");

    double ph0 = std::arg(ris.state0);

    // start from the threshold-0 codebook
    std::vector<std::uint8_t> bits(n);
    std::vector<double> diff0(n);
    std::vector<std::complex<double>> e(n);
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        diff0[i] = wrap_pi(-profile.phase[i] - ph0);
        bits[i] = (std::abs(diff0[i]) <= pi / 2.0) ? 0 : 1;
        e[i] = std::polar(1.0, profile.phase[i]);
        sum += (bits[i] ? ris.state1 : ris.state0) * e[i];
    }

    // Each cell flips state exactly twice as the boundary rotates through
    // 2*pi. Walking the sorted flip events updates the sum one cell at a
    // time, which makes the sweep exact rather than grid-sampled.
    struct Event
    {
        double t;
        std::uint32_t cell;
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double leave0 = std::fmod(diff0[i] - pi / 2.0 + two_pi, two_pi);
        double enter0 = std::fmod(diff0[i] + pi / 2.0 + two_pi, two_pi);
        events.push_back({leave0, std::uint32_t(i)});
        events.push_back({enter0, std::uint32_t(i)});
    }
    std::sort(events.begin(), events.end(), [](const Event &a, const Event &b) {
        return a.t < b.t || (a.t == b.t && a.cell < b.cell);
    });

    double best_gain = std::abs(sum);
    double best_t = 0.0;
    // Events sharing one time value flip together (symmetric profiles); only
    // the state after the whole group is reachable by a threshold. Candidate
    // thresholds are midpoints between distinct event times, so that
    // requantizing at the returned threshold reproduces the walked state.
    std::size_t i = 0;
    while (i < events.size())
    {
        std::size_t j = i;
        while (j < events.size() && events[j].t == events[i].t)
        {
            std::uint8_t old_bit = bits[events[j].cell];
            std::uint8_t new_bit = old_bit ? 0 : 1;
            sum += ((new_bit ? ris.state1 : ris.state0) - (old_bit ? ris.state1 : ris.state0)) *
                   e[events[j].cell];
            bits[events[j].cell] = new_bit;
            ++j;
        }
        double t_next = (j < events.size()) ? events[j].t : events.front().t + two_pi;
        double a = std::abs(sum);
        if (a > best_gain)
        {
            best_gain = a;
            best_t = std::fmod((events[i].t + t_next) / 2.0, two_pi);
        }
        i = j;
    }

    ThresholdSweepResult res;
    res.threshold = best_t;
    res.codebook = quantize_codebook(profile, ris, best_t, target);
    res.gain_db = array_factor_gain_db(res.codebook, profile, ris);
    return res;
}

}
