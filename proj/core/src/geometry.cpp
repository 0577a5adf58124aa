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

#include "rischan/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double pi = 3.14159265358979323846;

int walk_count(double from, double to, double step)
{
    if (to < from)
        return 0;
    // small epsilon so that e.g. (10.26 - 2.26) / 1 yields 9 points
    return static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
}

std::string two_digits(int i)
{
    std::string s = std::to_string(i);
    return s.size() < 2 ? "0" + s : s;
}

} // namespace

const char *to_string(Scenario s)
{
    switch (s)
    {
    case Scenario::Outdoor:
        return "outdoor";
    case Scenario::Indoor:
        return "indoor";
    case Scenario::O2I:
        return "o2i";
    }
    return "?";
}

const char *to_string(Mode m)
{
    switch (m)
    {
    case Mode::WithoutRis:
        return "without";
    case Mode::SpecularRis:
        return "specular";
    case Mode::IntelligentRis:
        return "intelligent";
    }
    return "?";
}

Scenario scenario_from_string(const std::string &s)
{
    if (s == "outdoor")
        return Scenario::Outdoor;
    if (s == "indoor")
        return Scenario::Indoor;
    if (s == "o2i")
        return Scenario::O2I;
    throw std::invalid_argument("unknown scenario '" + s + "'");
}

Mode mode_from_string(const std::string &s)
{
    if (s == "without")
        return Mode::WithoutRis;
    if (s == "specular")
        return Mode::SpecularRis;
    if (s == "intelligent")
        return Mode::IntelligentRis;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

void validate(const MeasurementPoint &p)
{
    if (!(p.d1 > 0.0))
        throw std::invalid_argument("point '" + p.point_id + "': d1 must be > 0");
    if (!(p.d2 > 0.0))
        throw std::invalid_argument("point '" + p.point_id + "': d2 must be > 0");
    if (!(p.eaoa_t > -90.0 && p.eaoa_t < 90.0))
        throw std::invalid_argument("point '" + p.point_id +
                                    "': eaoa_t outside (-90, 90), cos(theta_t) not positive");
    if (!(p.eaod_r > -90.0 && p.eaod_r < 90.0))
        throw std::invalid_argument("point '" + p.point_id +
                                    "': eaod_r outside (-90, 90), cos(theta_r) not positive");
}

void CampaignSpec::validate() const
{
    if (!(step > 0.0))
        throw std::invalid_argument("campaign: step must be > 0");
    if (scenario == Scenario::O2I)
    {
        if (!fixed_d1 || !(*fixed_d1 > 0.0))
            throw std::invalid_argument("campaign: O2I requires fixed_d1 > 0");
        for (const auto &a : aisles)
        {
            if (a.rx_from > a.rx_to)
                throw std::invalid_argument("campaign: aisle rx_from must be <= rx_to");
            if (a.side == AisleWalk::Side::Right && !(a.perp > 0.0))
                throw std::invalid_argument("campaign: right aisle perp must be > 0");
        }
    }
    else
    {
        for (const auto &c : cases)
        {
            if (c.tx_from > c.tx_to)
                throw std::invalid_argument("campaign: tx_from must be <= tx_to");
            if (c.rx_from > c.rx_to)
                throw std::invalid_argument("campaign: rx_from must be <= rx_to");
        }
    }
}

double right_aisle_eaod(int i, double theta_t_deg, double rx_from_m, double perp_m, double step_m)
{
    if (i < 1)
        throw std::domain_error("right_aisle_eaod: index must be >= 1");
    if (!(perp_m > 0.0))
        throw std::domain_error("right_aisle_eaod: perpendicular distance must be > 0");
    double offset = rx_from_m + (i - 1) * step_m;
    return std::atan(offset / perp_m) * 180.0 / pi - (90.0 - theta_t_deg);
}

CampaignGrid build_campaign_grid(const CampaignSpec &spec)
{
    spec.validate();
    CampaignGrid grid;

    if (spec.scenario == Scenario::O2I)
    {
        if (spec.aisles.empty())
        {
            grid.empty_range_warning = true;
            return grid;
        }
        for (const auto &aisle : spec.aisles)
        {
            int n = walk_count(aisle.rx_from, aisle.rx_to, spec.step);
            if (n == 0)
                grid.empty_range_warning = true;
            for (int i = 1; i <= n; ++i)
            {
                MeasurementPoint p;
                p.scenario = spec.scenario;
                p.mode = spec.mode;
                p.d1 = *spec.fixed_d1;
                p.eaoa_t = spec.fixed_theta_t;
                double offset = aisle.rx_from + (i - 1) * spec.step;
                if (aisle.side == AisleWalk::Side::Left)
                {
                    // Rx walks away from the RIS along the specular departure ray
                    p.d2 = offset;
                    p.eaod_r = spec.fixed_theta_t;
                }
                else
                {
                    // Rx offsets are perpendicular to the Tx-RIS line; d2 and
                    // the departure angle follow from the room geometry
                    p.d2 = std::sqrt(aisle.perp * aisle.perp + offset * offset);
                    p.eaod_r = right_aisle_eaod(i, spec.fixed_theta_t, aisle.rx_from, aisle.perp,
                                                spec.step);
                }
                std::ostringstream id;
                id << to_string(spec.scenario) << '-' << to_string(spec.mode) << '-'
                   << (aisle.side == AisleWalk::Side::Left ? "left" : "right") << "-r"
                   << two_digits(i);
                p.point_id = id.str();
                grid.points.push_back(std::move(p));
            }
        }
        return grid;
    }

    if (spec.cases.empty())
    {
        grid.empty_range_warning = true;
        return grid;
    }
    int case_index = 0;
    for (const auto &c : spec.cases)
    {
        ++case_index;
        int ntx = walk_count(c.tx_from, c.tx_to, spec.step);
        int nrx = walk_count(c.rx_from, c.rx_to, spec.step);
        if (ntx == 0 || nrx == 0)
            grid.empty_range_warning = true;
        for (int it = 0; it < ntx; ++it)
        {
            for (int ir = 0; ir < nrx; ++ir)
            {
                MeasurementPoint p;
                p.scenario = spec.scenario;
                p.mode = spec.mode;
                p.d1 = c.tx_from + it * spec.step;
                p.d2 = c.rx_from + ir * spec.step;
                p.eaoa_t = c.theta_t;
                p.eaod_r = c.theta_r;
                std::ostringstream id;
                id << to_string(spec.scenario) << '-' << to_string(spec.mode) << "-c" << case_index
                   << "-t" << two_digits(it + 1) << "-r" << two_digits(ir + 1);
                p.point_id = id.str();
                grid.points.push_back(std::move(p));
            }
        }
    }
    return grid;
}

std::size_t total_acquisitions(const std::vector<CampaignSpec> &specs)
{
    std::size_t n = 0;
    for (const auto &s : specs)
        n += build_campaign_grid(s).points.size();
    return n;
}

CampaignSpec builtin_campaign(Scenario scenario, Mode mode)
{
    CampaignSpec spec;
    spec.scenario = scenario;
    spec.mode = mode;

    if (scenario == Scenario::O2I)
    {
        spec.fixed_d1 = 9.0;
        spec.fixed_theta_t = 45.0;
        spec.aisles = {{AisleWalk::Side::Left, 2.26, 10.26, 4.5},
                       {AisleWalk::Side::Right, 2.26, 10.26, 4.5}};
        return spec;
    }

    if (mode != Mode::IntelligentRis)
    {
        // uniform panel (or the panel removed): one 45/45 case, full walks
        spec.cases = {{45, 45, 5, 18, 5, 18}};
        return spec;
    }

    if (scenario == Scenario::Outdoor)
    {
        spec.cases = {
            {45, 30, 9, 18, 5, 12},
            {45, 45, 5, 18, 5, 18}, // case 2 keeps the short Tx start of the uniform walks
            {45, 60, 9, 18, 8, 15},
            {60, 30, 9, 18, 8, 18},
            {60, 45, 9, 18, 8, 15},
            {60, 60, 9, 18, 8, 15},
            {75, 30, 9, 18, 8, 15},
            {75, 45, 9, 18, 8, 15},
            {75, 60, 9, 18, 8, 15},
        };
    }
    else
    {
        spec.cases = {
            {45, 45, 5, 18, 5, 18},
            {60, 30, 5, 18, 5, 18},
        };
    }
    return spec;
}

std::vector<CampaignSpec> builtin_campaigns()
{
    std::vector<CampaignSpec> all;
    for (Scenario s : {Scenario::Outdoor, Scenario::Indoor, Scenario::O2I})
        for (Mode m : {Mode::WithoutRis, Mode::SpecularRis, Mode::IntelligentRis})
            all.push_back(builtin_campaign(s, m));
    return all;
}

}
