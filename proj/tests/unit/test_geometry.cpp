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

#include <doctest.h>

#include "rischan/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <set>

using namespace rischan;

TEST_CASE("right aisle departure angles match the deployed walk")
{
    // published angle set for positions 1..9 (rx 2.26 m, perpendicular 4.5 m,
    // theta_t 45 deg)
    const double expected[9] = {-18.33, -9.08, -1.57, 4.45, 9.29, 13.2, 16.42, 19.08, 21.32};
    for (int i = 1; i <= 9; ++i)
        CHECK(std::abs(right_aisle_eaod(i, 45.0, 2.26, 4.5) - expected[i - 1]) < 0.01);
}

TEST_CASE("right aisle angle is strictly increasing in the position index")
{
    for (double theta_t : {30.0, 45.0, 75.0})
        for (int i = 1; i < 20; ++i)
            CHECK(right_aisle_eaod(i + 1, theta_t, 2.26, 4.5) >
                  right_aisle_eaod(i, theta_t, 2.26, 4.5));
}

TEST_CASE("right aisle angle rejects bad arguments")
{
    CHECK_THROWS_AS(right_aisle_eaod(0, 45.0, 2.26, 4.5), std::domain_error);
    CHECK_THROWS_AS(right_aisle_eaod(1, 45.0, 2.26, 0.0), std::domain_error);
    CHECK_THROWS_AS(right_aisle_eaod(1, 45.0, 2.26, -1.0), std::domain_error);
}

TEST_CASE("outdoor grids match the campaign tables")
{
    CHECK(build_campaign_grid(builtin_campaign(Scenario::Outdoor, Mode::WithoutRis))
              .points.size() == 196);
    CHECK(build_campaign_grid(builtin_campaign(Scenario::Outdoor, Mode::SpecularRis))
              .points.size() == 196);

    CampaignSpec intelligent = builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis);
    CHECK(build_campaign_grid(intelligent).points.size() == 866);

    // per-case point counts
    const std::size_t expected_counts[9] = {80, 196, 80, 110, 80, 80, 80, 80, 80};
    for (std::size_t c = 0; c < 9; ++c)
    {
        CampaignSpec single = intelligent;
        single.cases = {intelligent.cases[c]};
        CHECK(build_campaign_grid(single).points.size() == expected_counts[c]);
    }
}

TEST_CASE("indoor grids match the campaign tables")
{
    CHECK(build_campaign_grid(builtin_campaign(Scenario::Indoor, Mode::WithoutRis))
              .points.size() == 196);
    CHECK(build_campaign_grid(builtin_campaign(Scenario::Indoor, Mode::SpecularRis))
              .points.size() == 196);
    CHECK(build_campaign_grid(builtin_campaign(Scenario::Indoor, Mode::IntelligentRis))
              .points.size() == 392);
}

TEST_CASE("O2I grids walk both aisles with the derived geometry")
{
    CampaignGrid grid = build_campaign_grid(builtin_campaign(Scenario::O2I, Mode::IntelligentRis));
    REQUIRE(grid.points.size() == 18);

    for (int i = 0; i < 9; ++i)
    {
        const MeasurementPoint &left = grid.points[std::size_t(i)];
        CHECK(left.d1 == 9.0);
        CHECK(left.eaoa_t == 45.0);
        CHECK(left.eaod_r == 45.0);
        CHECK(left.d2 == doctest::Approx(2.26 + i).epsilon(1e-12));
    }
    for (int i = 0; i < 9; ++i)
    {
        const MeasurementPoint &right = grid.points[std::size_t(9 + i)];
        double offset = 2.26 + i;
        CHECK(right.d2 == doctest::Approx(std::hypot(4.5, offset)).epsilon(1e-12));
        CHECK(right.eaod_r == doctest::Approx(right_aisle_eaod(i + 1, 45.0, 2.26, 4.5)));
    }
}

TEST_CASE("total acquisitions across the nine campaigns")
{
    CHECK(total_acquisitions(builtin_campaigns()) == 2096);

    std::vector<CampaignSpec> outdoor, o2i;
    for (Mode m : {Mode::WithoutRis, Mode::SpecularRis, Mode::IntelligentRis})
    {
        outdoor.push_back(builtin_campaign(Scenario::Outdoor, m));
        o2i.push_back(builtin_campaign(Scenario::O2I, m));
    }
    CHECK(total_acquisitions(outdoor) == 1258);
    CHECK(total_acquisitions(o2i) == 54);
}

TEST_CASE("grid generation is deterministic and order-stable")
{
    CampaignSpec spec = builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis);
    CampaignGrid a = build_campaign_grid(spec);
    CampaignGrid b = build_campaign_grid(spec);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i)
    {
        CHECK(a.points[i].point_id == b.points[i].point_id);
        CHECK(a.points[i].d1 == b.points[i].d1);
        CHECK(a.points[i].d2 == b.points[i].d2);
    }

    // ids are unique joins
    std::set<std::string> ids;
    for (const auto &p : a.points)
        ids.insert(p.point_id);
    CHECK(ids.size() == a.points.size());
}

TEST_CASE("degenerate specs warn instead of failing")
{
    CampaignSpec spec = builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis);
    spec.cases.clear();
    CampaignGrid grid = build_campaign_grid(spec);
    CHECK(grid.points.empty());
    CHECK(grid.empty_range_warning);
}

TEST_CASE("invalid specs and points are rejected")
{
    CampaignSpec spec = builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis);
    spec.step = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec = builtin_campaign(Scenario::Outdoor, Mode::IntelligentRis);
    spec.cases[0].tx_from = 20.0; // beyond tx_to
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    MeasurementPoint p{1.0, 1.0, 0.0, 180.0, 0.0, 0.0, Scenario::Outdoor, Mode::IntelligentRis,
                       "p"};
    CHECK_NOTHROW(validate(p));
    p.d2 = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p.d2 = 1.0;
    p.eaoa_t = 90.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}
