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

#include "rischan/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double two_pi = 6.28318530717958647692528676656;

} // namespace

void FrequencySweep::validate() const
{
    if (samples.size() < 2)
        throw std::invalid_argument("sweep '" + point_ref + "': needs at least 2 samples");
    if (!(f_stop > f_start))
        throw std::invalid_argument("sweep '" + point_ref + "': f_stop must exceed f_start");
}

void CalibrationProfile::validate() const
{
    if (system_response.size() < 2)
        throw std::invalid_argument("calibration: needs at least 2 samples");
    if (!(f_stop > f_start))
        throw std::invalid_argument("calibration: f_stop must exceed f_start");
    for (std::size_t i = 0; i < system_response.size(); ++i)
        if (std::abs(system_response[i]) == 0.0)
            throw std::invalid_argument("calibration: zero-magnitude sample at bin " +
                                        std::to_string(i));
}

FrequencySweep make_sweep_frame(std::size_t k, double f_start, double f_stop)
{
    FrequencySweep s;
    s.f_start = f_start;
    s.f_stop = f_stop;
    s.samples.assign(k, {1.0, 0.0});
    return s;
}

FrequencySweep calibrate(const FrequencySweep &raw, const CalibrationProfile &cal)
{
    raw.validate();
    if (raw.samples.size() != cal.system_response.size())
        throw std::invalid_argument("calibrate: sweep and calibration lengths differ");
    for (std::size_t i = 0; i < cal.system_response.size(); ++i)
        if (std::abs(cal.system_response[i]) == 0.0)
            throw std::invalid_argument("calibrate: zero-magnitude calibration at bin " +
                                        std::to_string(i));

    FrequencySweep out = raw;
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] /= cal.system_response[i];
    return out;
}

PathLossResult path_loss(const FrequencySweep &sweep, double gt_dbi, double gr_dbi)
{
    sweep.validate();
    double acc = 0.0;
    for (const auto &s : sweep.samples)
        acc += std::norm(s);
    if (acc == 0.0)
        throw std::invalid_argument("path_loss: all-zero sweep");
    double raw = 10.0 * std::log10(acc / double(sweep.samples.size())) - gt_dbi - gr_dbi;
    return {-raw, raw};
}

std::vector<std::complex<double>> ctf_to_cir(const FrequencySweep &sweep)
{
    sweep.validate();
    const std::size_t k = sweep.samples.size();

    std::vector<std::complex<double>> windowed(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        double w = 0.5 * (1.0 - std::cos(two_pi * double(i) / double(k - 1)));
        windowed[i] = sweep.samples[i] * w;
    }

    // Direct inverse DFT; K is small enough (191 scan points) that an FFT
    // dependency buys nothing here.
    std::vector<std::complex<double>> cir(k);
    for (std::size_t n = 0; n < k; ++n)
    {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < k; ++m)
            acc += windowed[m] * std::polar(1.0, two_pi * double(n) * double(m) / double(k));
        cir[n] = acc / double(k);
    }
    return cir;
}

namespace {

PowerDelayProfile pdp_from_cir(const std::vector<std::complex<double>> &cir,
                               double delay_resolution)
{
    PowerDelayProfile pdp;
    pdp.delay_resolution = delay_resolution;
    pdp.powers_db.resize(cir.size());
    for (std::size_t i = 0; i < cir.size(); ++i)
    {
        double p = std::norm(cir[i]);
        pdp.powers_db[i] = 10.0 * std::log10(std::max(p, 1e-300));
    }

    // noise floor: median of the last quarter of delay bins
    std::vector<double> tail(pdp.powers_db.begin() + std::ptrdiff_t(3 * cir.size() / 4),
                             pdp.powers_db.end());
    std::nth_element(tail.begin(), tail.begin() + std::ptrdiff_t(tail.size() / 2), tail.end());
    pdp.noise_floor_db = tail[tail.size() / 2];
    return pdp;
}

} // namespace

PowerDelayProfile compute_pdp(const FrequencySweep &sweep)
{
    return pdp_from_cir(ctf_to_cir(sweep), 1.0 / sweep.bandwidth());
}

PowerDelayProfile oversampled_pdp(const FrequencySweep &sweep, std::size_t factor)
{
    if (factor < 1)
        throw std::invalid_argument("oversampled_pdp: factor must be >= 1");
    sweep.validate();
    const std::size_t k = sweep.samples.size();
    const std::size_t n_out = k * factor;

    std::vector<std::complex<double>> windowed(n_out, {0.0, 0.0});
    for (std::size_t i = 0; i < k; ++i)
    {
        double w = 0.5 * (1.0 - std::cos(two_pi * double(i) / double(k - 1)));
        windowed[i] = sweep.samples[i] * w;
    }

    std::vector<std::complex<double>> cir(n_out);
    for (std::size_t n = 0; n < n_out; ++n)
    {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < k; ++m)
            acc += windowed[m] * std::polar(1.0, two_pi * double(n) * double(m) / double(n_out));
        cir[n] = acc / double(k);
    }
    return pdp_from_cir(cir, 1.0 / (sweep.bandwidth() * double(factor)));
}

std::vector<Mpc> detect_mpcs(PowerDelayProfile &pdp, double gamma_p_db, double gamma_n_db)
{
    if (pdp.powers_db.empty())
        throw std::invalid_argument("detect_mpcs: empty profile");

    double peak = *std::max_element(pdp.powers_db.begin(), pdp.powers_db.end());
    pdp.threshold_db = std::max(peak - gamma_p_db, pdp.noise_floor_db + gamma_n_db);

    pdp.valid_mpcs.clear();
    for (std::size_t i = 0; i < pdp.powers_db.size(); ++i)
        if (pdp.powers_db[i] >= pdp.threshold_db)
            pdp.valid_mpcs.push_back({pdp.delay_at(i), pdp.powers_db[i]});
    return pdp.valid_mpcs;
}

double rms_delay_spread(const std::vector<Mpc> &mpcs)
{
    if (mpcs.empty())
        throw std::invalid_argument("rms_delay_spread: no valid components");

    double psum = 0.0, m1 = 0.0;
    for (const auto &m : mpcs)
    {
        double p = std::pow(10.0, m.power_db / 10.0);
        psum += p;
        m1 += p * m.delay_s;
    }
    m1 /= psum;

    // second central moment accumulated directly; exact zero for one tap
    double var = 0.0;
    for (const auto &m : mpcs)
        var += std::pow(10.0, m.power_db / 10.0) * (m.delay_s - m1) * (m.delay_s - m1);
    return std::sqrt(var / psum);
}

double coherence_bandwidth(double rms_ds_s, double k_factor)
{
    if (!(rms_ds_s > 0.0))
        throw std::domain_error("coherence_bandwidth: rms delay spread must be > 0");
    if (!(k_factor > 0.0))
        throw std::domain_error("coherence_bandwidth: k factor must be > 0");
    return 1.0 / (k_factor * rms_ds_s);
}

}
