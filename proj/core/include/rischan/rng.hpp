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

#ifndef RISCHAN_RNG_HPP
#define RISCHAN_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace rischan {

// Small self-contained generator (splitmix64). std::normal_distribution is
// implementation-defined, which would break the same-seed byte-identical
// output guarantee, so sampling is done by hand.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal, Box-Muller (no caching so the draw count is predictable)
    double normal()
    {
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    std::uint64_t state_;
};

// FNV-1a hash of an id string, mixed with the run seed. Each measurement
// point gets its own substream, so parallel grid synthesis and grid-order
// permutations produce identical realizations.
inline std::uint64_t substream_seed(std::uint64_t run_seed, std::string_view id)
{
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : id)
    {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h ^ (run_seed * 0x9E3779B97F4A7C15ULL);
}

}

#endif
