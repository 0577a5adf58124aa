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

#ifndef RISCHAN_GEOMETRY_HPP
#define RISCHAN_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

namespace rischan {

enum class Scenario
{
    Outdoor,
    Indoor,
    O2I
};

enum class Mode
{
    WithoutRis,
    SpecularRis,
    IntelligentRis
};

const char *to_string(Scenario s);
const char *to_string(Mode m);
Scenario scenario_from_string(const std::string &s);
Mode mode_from_string(const std::string &s);

// One Tx / RIS / Rx geometry sample. Angles are in degrees; elevation angles
// are measured from the panel normal inside the horizontal cut. Azimuths are
// fixed by the campaign design (Tx side 180, Rx side 0).
struct MeasurementPoint
{
    double d1 = 0.0;      // Tx to RIS-center distance [m]
    double d2 = 0.0;      // Rx to RIS-center distance [m]
    double eaoa_t = 0.0;  // elevation angle of arrival onto the panel [deg]
    double aaoa_t = 180.0;
    double eaod_r = 0.0;  // elevation angle of departure from the panel [deg]
    double aaod_r = 0.0;
    Scenario scenario = Scenario::Outdoor;
    Mode mode = Mode::IntelligentRis;
    std::string point_id;
};

// Throws std::invalid_argument naming the violated invariant.
void validate(const MeasurementPoint &p);

// One (theta_t, theta_r) angle case with its Tx/Rx walk ranges [m].
struct AngleCase
{
    double theta_t = 45.0;
    double theta_r = 45.0;
    double tx_from = 5.0;
    double tx_to = 18.0;
    double rx_from = 5.0;
    double rx_to = 18.0;
};

// Rx walk through a room aisle with the Tx fixed (O2I campaigns). For the
// right aisle rx positions are perpendicular offsets from the Tx-RIS line
// and the departure angle follows from the room geometry.
struct AisleWalk
{
    enum class Side
    {
        Left,
        Right
    };
    Side side = Side::Left;
    double rx_from = 2.26;
    double rx_to = 10.26;
    double perp = 4.5; // right aisle only: distance of the aisle from the RIS [m]
};

struct CampaignSpec
{
    Scenario scenario = Scenario::Outdoor;
    Mode mode = Mode::IntelligentRis;
    double step = 1.0; // walk step [m]
    std::vector<AngleCase> cases;     // outdoor / indoor
    std::optional<double> fixed_d1;   // O2I: Tx does not move
    double fixed_theta_t = 45.0;      // O2I
    std::vector<AisleWalk> aisles;    // O2I

    void validate() const; // throws std::invalid_argument
};

struct CampaignGrid
{
    std::vector<MeasurementPoint> points;
    bool empty_range_warning = false;
};

// Departure angle at the i-th point (1-based) of a perpendicular aisle walk,
// in degrees: atan((rx_from + (i-1)*step) / perp) - (90 - theta_t).
double right_aisle_eaod(int i, double theta_t_deg, double rx_from_m, double perp_m,
                        double step_m = 1.0);

// Expand a campaign spec into its measurement points. Outdoor/indoor specs
// produce the Cartesian product of Tx and Rx positions per angle case; O2I
// specs produce fixed-Tx aisle walks. Deterministic and order-stable.
CampaignGrid build_campaign_grid(const CampaignSpec &spec);

std::size_t total_acquisitions(const std::vector<CampaignSpec> &specs);

// Built-in campaign definitions for the three scenarios and three modes.
CampaignSpec builtin_campaign(Scenario scenario, Mode mode);
std::vector<CampaignSpec> builtin_campaigns();

}

#endif
