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

#ifndef RISCHAN_SWEEP_HPP
#define RISCHAN_SWEEP_HPP

#include <complex>
#include <string>
#include <vector>

namespace rischan {

// Frequency-domain channel transfer function: K complex samples uniformly
// spaced over [f_start, f_stop].
struct FrequencySweep
{
    std::vector<std::complex<double>> samples;
    double f_start = 2.5e9;  // [Hz]
    double f_stop = 2.69e9;  // [Hz]
    std::string point_ref;   // id of the measurement point this sweep belongs to

    std::size_t k() const { return samples.size(); }
    double bandwidth() const { return f_stop - f_start; }
    double frequency_at(std::size_t i) const
    {
        return f_start + (f_stop - f_start) * double(i) / double(samples.size() - 1);
    }

    void validate() const; // throws std::invalid_argument
};

// Back-to-back system response G(f) on the same frequency grid.
struct CalibrationProfile
{
    std::vector<std::complex<double>> system_response;
    double f_start = 2.5e9;
    double f_stop = 2.69e9;
    std::string source;

    void validate() const; // throws std::invalid_argument (zero samples etc.)
};

// Flat sweep with the default band and K = 191 scan points.
FrequencySweep make_sweep_frame(std::size_t k = 191, double f_start = 2.5e9,
                                double f_stop = 2.69e9);

}

#endif
