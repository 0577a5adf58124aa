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

#ifndef RISCHAN_REFERENCE_TABLES_HPP
#define RISCHAN_REFERENCE_TABLES_HPP

#include "rischan/geometry.hpp"
#include "rischan/pl_models.hpp"

#include <array>
#include <vector>

namespace rischan {

// Published fitting results for the deployed campaigns, embedded as typed
// constants for side-by-side diffing. Measurement rows depend on the
// physical surroundings and are reference-only; free-space rows are the
// reproduction targets.

enum class DataSource
{
    Measurement,
    FreeSpace
};

const char *to_string(DataSource s);

struct ReferenceFitRow
{
    Scenario scenario;
    ModelFamily family;
    DataSource source;
    // (intercept, exp_d1, exp_d2, exp_theta_t, exp_theta_r); reduced rows
    // carry only their active columns
    std::vector<double> values;
    VariableMask mask;
};

const std::vector<ReferenceFitRow> &reference_fit_rows();

// First matching row, or nullptr.
const ReferenceFitRow *find_reference_row(Scenario scenario, ModelFamily family,
                                          DataSource source);

// Frozen close-in intercept per scenario (outdoor at the 1 m / 1 m / 0 deg
// reference; indoor and O2I at their published reduced-model references).
double ci_reference_db(Scenario scenario);

// Published per-scenario, per-mode RMS delay spread statistics [ns]; used as
// qualitative targets by the synthetic multipath templates.
struct RmsDsStats
{
    Scenario scenario;
    Mode mode;
    double mu_ns;
    double sigma_ns;
};

const std::vector<RmsDsStats> &reference_rms_ds_stats();
double rms_ds_target_ns(Scenario scenario, Mode mode);

// Default fit box bounds per family, (intercept, exp_d1, exp_d2,
// exp_theta_t, exp_theta_r) order. The close-in intercept is frozen by an
// equal lower and upper bound at the scenario reference.
struct BoundsPair
{
    std::array<double, 5> lower;
    std::array<double, 5> upper;
};

BoundsPair default_fit_bounds(ModelFamily family, Scenario scenario);

}

#endif
