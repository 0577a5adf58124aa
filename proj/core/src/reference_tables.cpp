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

#include "rischan/reference_tables.hpp"

#include <stdexcept>

namespace rischan {

namespace {

const VariableMask full_mask{true, true, true, true};
const VariableMask distance_mask{true, true, false, false};
const VariableMask d2_mask{false, true, false, false};

} // namespace

const char *to_string(DataSource s)
{
    return s == DataSource::Measurement ? "measurement" : "free_space";
}

const std::vector<ReferenceFitRow> &reference_fit_rows()
{
    static const std::vector<ReferenceFitRow> rows = {
        // outdoor, all four variables
        {Scenario::Outdoor, ModelFamily::FiRis, DataSource::Measurement,
         {20.08, 2.29, 1.88, 1.21, 0.65}, full_mask},
        {Scenario::Outdoor, ModelFamily::FiRis, DataSource::FreeSpace,
         {24.52, 2.05, 1.95, 1.15, 0.79}, full_mask},
        {Scenario::Outdoor, ModelFamily::CiRis, DataSource::Measurement,
         {21.38, 2.22, 1.82, 1.21, 0.64}, full_mask},
        {Scenario::Outdoor, ModelFamily::CiRis, DataSource::FreeSpace,
         {21.38, 2.21, 2.08, 1.14, 0.81}, full_mask},
        // indoor, fixed angles: distance terms only
        {Scenario::Indoor, ModelFamily::FiRis, DataSource::Measurement, {28.16, 1.9, 1.68},
         distance_mask},
        {Scenario::Indoor, ModelFamily::FiRis, DataSource::FreeSpace, {28.7, 1.96, 1.96},
         distance_mask},
        {Scenario::Indoor, ModelFamily::CiRis, DataSource::Measurement, {26.97, 1.95, 1.74},
         distance_mask},
        {Scenario::Indoor, ModelFamily::CiRis, DataSource::FreeSpace, {26.97, 2.04, 2.04},
         distance_mask},
        // O2I, fixed Tx: d2 only
        {Scenario::O2I, ModelFamily::FiRis, DataSource::Measurement, {46.11, 1.51}, d2_mask},
        {Scenario::O2I, ModelFamily::FiRis, DataSource::FreeSpace, {47.64, 1.8}, d2_mask},
        {Scenario::O2I, ModelFamily::CiRis, DataSource::Measurement, {46.06, 1.52}, d2_mask},
        {Scenario::O2I, ModelFamily::CiRis, DataSource::FreeSpace, {46.06, 2.0}, d2_mask},
    };
    return rows;
}

const ReferenceFitRow *find_reference_row(Scenario scenario, ModelFamily family, DataSource source)
{
    for (const auto &row : reference_fit_rows())
        if (row.scenario == scenario && row.family == family && row.source == source)
            return &row;
    return nullptr;
}

double ci_reference_db(Scenario scenario)
{
    switch (scenario)
    {
    case Scenario::Outdoor:
        return 21.38; // (d1, d2, theta_t, theta_r) = (1 m, 1 m, 0, 0)
    case Scenario::Indoor:
        return 26.97; // (1 m, 1 m, 45 deg, 45 deg)
    case Scenario::O2I:
        return 46.06; // (9 m, 1 m, 45 deg, 45 deg)
    }
    throw std::invalid_argument("ci_reference_db: unknown scenario");
}

const std::vector<RmsDsStats> &reference_rms_ds_stats()
{
    static const std::vector<RmsDsStats> rows = {
        {Scenario::Outdoor, Mode::WithoutRis, 37.55, 9.65},
        {Scenario::Outdoor, Mode::SpecularRis, 10.79, 8.79},
        {Scenario::Outdoor, Mode::IntelligentRis, 8.42, 6.9},
        {Scenario::Indoor, Mode::WithoutRis, 13.04, 4.29},
        {Scenario::Indoor, Mode::SpecularRis, 5.88, 4.31},
        {Scenario::Indoor, Mode::IntelligentRis, 5.01, 2.74},
        {Scenario::O2I, Mode::WithoutRis, 24.21, 8.2},
        {Scenario::O2I, Mode::SpecularRis, 16.04, 9.69},
        {Scenario::O2I, Mode::IntelligentRis, 10.36, 9.53},
    };
    return rows;
}

double rms_ds_target_ns(Scenario scenario, Mode mode)
{
    for (const auto &r : reference_rms_ds_stats())
        if (r.scenario == scenario && r.mode == mode)
            return r.mu_ns;
    throw std::invalid_argument("rms_ds_target_ns: unknown scenario/mode");
}

BoundsPair default_fit_bounds(ModelFamily family, Scenario scenario)
{
    if (family == ModelFamily::FiRis || family == ModelFamily::FiTraditional)
        return {{10.0, 1.0, 1.0, 0.0, 0.0}, {50.0, 3.0, 3.0, 2.0, 2.0}};
    double ref = ci_reference_db(scenario);
    return {{ref, 1.0, 1.0, 0.0, 0.0}, {ref, 3.0, 3.0, 2.0, 2.0}};
}

}
