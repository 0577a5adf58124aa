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

#include "rischan/campaign_io.hpp"
#include "rischan/rng.hpp"
#include "rischan/synthesis.hpp"

#include <sstream>

using namespace rischan;

namespace {

SweepDataset synthetic_dataset(Scenario scenario, Mode mode, std::uint64_t seed)
{
    SynthesisConfig cfg;
    cfg.seed = seed;
    cfg.shadow_sigma_db = 2.0;
    RisConfiguration ris = default_ris();
    CampaignGrid grid = build_campaign_grid(builtin_campaign(scenario, mode));

    SweepDataset ds;
    ds.k = cfg.k;
    ds.f_start = cfg.f_start;
    ds.f_stop = cfg.f_stop;
    for (const auto &p : grid.points)
        ds.records.push_back({p, synth_sweep(p, cfg, ris)});
    return ds;
}

template <typename T, typename SaveFn, typename LoadFn>
T round_trip(const T &value, SaveFn save, LoadFn load)
{
    std::ostringstream os;
    save(value, os);
    std::istringstream is(os.str());
    return load(is);
}

} // namespace

TEST_CASE("campaign specs round trip")
{
    for (Scenario s : {Scenario::Outdoor, Scenario::Indoor, Scenario::O2I})
        for (Mode m : {Mode::WithoutRis, Mode::SpecularRis, Mode::IntelligentRis})
        {
            CampaignSpec spec = builtin_campaign(s, m);
            CampaignSpec loaded = round_trip(
                spec, [](const CampaignSpec &v, std::ostream &os) { save_campaign(v, os); },
                [](std::istream &is) { return load_campaign(is); });
            CHECK(loaded.scenario == spec.scenario);
            CHECK(loaded.mode == spec.mode);
            CHECK(loaded.step == spec.step);
            REQUIRE(loaded.cases.size() == spec.cases.size());
            for (std::size_t i = 0; i < spec.cases.size(); ++i)
            {
                CHECK(loaded.cases[i].theta_t == spec.cases[i].theta_t);
                CHECK(loaded.cases[i].tx_from == spec.cases[i].tx_from);
                CHECK(loaded.cases[i].rx_to == spec.cases[i].rx_to);
            }
            REQUIRE(loaded.aisles.size() == spec.aisles.size());
            CHECK(build_campaign_grid(loaded).points.size() ==
                  build_campaign_grid(spec).points.size());
        }
}

TEST_CASE("sweep datasets round trip field-identically")
{
    SweepDataset ds = synthetic_dataset(Scenario::Outdoor, Mode::WithoutRis, 12); // 196 points
    SweepDataset loaded = round_trip(
        ds, [](const SweepDataset &v, std::ostream &os) { save_sweeps(v, os); },
        [](std::istream &is) { return load_sweeps(is); });

    REQUIRE(loaded.records.size() == ds.records.size());
    CHECK(loaded.k == ds.k);
    CHECK(loaded.f_start == ds.f_start);
    CHECK(loaded.f_stop == ds.f_stop);
    for (std::size_t i = 0; i < ds.records.size(); ++i)
    {
        const auto &a = ds.records[i];
        const auto &b = loaded.records[i];
        CHECK(a.point.point_id == b.point.point_id);
        CHECK(a.point.scenario == b.point.scenario);
        CHECK(a.point.mode == b.point.mode);
        CHECK(a.point.d1 == b.point.d1); // bit-exact
        CHECK(a.point.d2 == b.point.d2);
        CHECK(a.point.eaoa_t == b.point.eaoa_t);
        CHECK(a.point.eaod_r == b.point.eaod_r);
        REQUIRE(a.sweep.samples.size() == b.sweep.samples.size());
        for (std::size_t j = 0; j < a.sweep.samples.size(); ++j)
            CHECK(a.sweep.samples[j] == b.sweep.samples[j]); // bit-exact
    }
}

TEST_CASE("loader reports the index of a truncated record")
{
    SweepDataset ds = synthetic_dataset(Scenario::O2I, Mode::IntelligentRis, 3);
    std::ostringstream os;
    save_sweeps(ds, os);
    std::string text = os.str();

    // drop the last line (the samples of the final record)
    std::size_t cut = text.rfind("samples");
    std::istringstream is(text.substr(0, cut));
    try
    {
        load_sweeps(is);
        FAIL("expected a parse error");
    }
    catch (const ParseError &e)
    {
        CHECK(std::string(e.what()).find("record 17") != std::string::npos);
    }
}

TEST_CASE("loader rejects invariant violations with the invariant name")
{
    SweepDataset ds = synthetic_dataset(Scenario::O2I, Mode::IntelligentRis, 3);
    std::ostringstream os;
    save_sweeps(ds, os);
    std::string text = os.str();

    // corrupt a point's elevation angle beyond the open interval
    auto pos = text.find(" 45 45 180 0");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, " 95 45 180 0");
    std::istringstream is(text);
    try
    {
        load_sweeps(is);
        FAIL("expected a parse error");
    }
    catch (const ParseError &e)
    {
        CHECK(std::string(e.what()).find("eaoa_t") != std::string::npos);
    }
}

TEST_CASE("version and sample-count mismatches are rejected")
{
    std::istringstream wrong_version("rischan.sweeps v9\n");
    CHECK_THROWS_AS(load_sweeps(wrong_version), ParseError);

    std::istringstream wrong_kind("rischan.table v1\n");
    CHECK_THROWS_AS(load_sweeps(wrong_kind), ParseError);

    std::istringstream truncated_samples("rischan.sweeps v1\n"
                                         "band 2500000000 2690000000\n"
                                         "k 4\n"
                                         "count 1\n"
                                         "point p outdoor intelligent 1 1 0 0 180 0\n"
                                         "samples 1 0 1 0 1 0\n");
    CHECK_THROWS_AS(load_sweeps(truncated_samples), ParseError);
}

TEST_CASE("calibration profiles round trip and reject zeros")
{
    CalibrationProfile cal;
    cal.source = "back-to-back bench";
    Rng rng(5);
    cal.system_response.resize(191);
    for (auto &g : cal.system_response)
        g = {rng.uniform(0.5, 1.5), rng.uniform(-0.5, 0.5)};

    CalibrationProfile loaded = round_trip(
        cal, [](const CalibrationProfile &v, std::ostream &os) { save_calibration(v, os); },
        [](std::istream &is) { return load_calibration(is); });
    CHECK(loaded.source == cal.source);
    REQUIRE(loaded.system_response.size() == cal.system_response.size());
    for (std::size_t i = 0; i < cal.system_response.size(); ++i)
        CHECK(loaded.system_response[i] == cal.system_response[i]);

    cal.system_response[10] = 0.0;
    std::ostringstream os;
    save_calibration(cal, os);
    std::istringstream is(os.str());
    CHECK_THROWS_AS(load_calibration(is), ParseError);
}

TEST_CASE("fit records round trip")
{
    FitRecord rec;
    rec.scenario = Scenario::Indoor;
    rec.fit.params.family = ModelFamily::CiRis;
    rec.fit.params.alpha_or_ref = 26.97;
    rec.fit.params.exp_d1 = 2.0463;
    rec.fit.params.exp_d2 = 2.0481;
    rec.fit.params.mask = {true, true, false, false};
    rec.fit.sf_mu = 1e-9;
    rec.fit.sf_sigma = 1.154;
    rec.fit.bounds_active = {true, false, false, false, false};
    rec.fit.iterations = 3;
    rec.fit.converged = true;
    rec.bounds.lower = {26.97, 1, 1, 0, 0};
    rec.bounds.upper = {26.97, 3, 3, 2, 2};
    rec.n_points = 392;
    rec.calibration_offset_db = 18.04;

    FitRecord loaded = round_trip(
        rec, [](const FitRecord &v, std::ostream &os) { save_fit(v, os); },
        [](std::istream &is) { return load_fit(is); });
    CHECK(loaded.scenario == rec.scenario);
    CHECK(loaded.fit.params.family == rec.fit.params.family);
    CHECK(loaded.fit.params.alpha_or_ref == rec.fit.params.alpha_or_ref);
    CHECK(loaded.fit.params.exp_d1 == rec.fit.params.exp_d1);
    CHECK(loaded.fit.params.mask.theta_t == false);
    CHECK(loaded.fit.bounds_active[0] == true);
    CHECK(loaded.bounds.lower == rec.bounds.lower);
    CHECK(loaded.bounds.upper == rec.bounds.upper);
    CHECK(loaded.n_points == 392);
    CHECK(loaded.calibration_offset_db == rec.calibration_offset_db);
}

TEST_CASE("tables round trip and reject malformed rows")
{
    Table t;
    t.title = "demo table";
    t.notes = {"first note", "second note"};
    t.columns = {"a", "b"};
    t.rows = {{"x", format_double(0.1)}, {"y", format_double(-3.25)}};

    Table loaded = round_trip(
        t, [](const Table &v, std::ostream &os) { save_table(v, os); },
        [](std::istream &is) { return load_table(is); });
    CHECK(loaded.title == t.title);
    CHECK(loaded.notes == t.notes);
    CHECK(loaded.columns == t.columns);
    CHECK(loaded.rows == t.rows);
    CHECK(loaded.number_at(1, "b") == -3.25);

    Table bad = t;
    bad.rows.push_back({"only-one-cell"});
    std::ostringstream os;
    CHECK_THROWS_AS(save_table(bad, os), std::invalid_argument);

    std::istringstream is("rischan.table v1\ntitle x\nrow 1 2\n");
    CHECK_THROWS_AS(load_table(is), ParseError); // row before columns
}

TEST_CASE("published fitting rows are embedded for diffing")
{
    auto tables = embed_reference_tables();
    REQUIRE(tables.size() == 3);

    const ReferenceFitRow *outdoor_fi =
        find_reference_row(Scenario::Outdoor, ModelFamily::FiRis, DataSource::FreeSpace);
    REQUIRE(outdoor_fi != nullptr);
    CHECK(outdoor_fi->values == std::vector<double>{24.52, 2.05, 1.95, 1.15, 0.79});

    const ReferenceFitRow *indoor_ci =
        find_reference_row(Scenario::Indoor, ModelFamily::CiRis, DataSource::FreeSpace);
    REQUIRE(indoor_ci != nullptr);
    CHECK(indoor_ci->values == std::vector<double>{26.97, 2.04, 2.04});

    const ReferenceFitRow *o2i_ci =
        find_reference_row(Scenario::O2I, ModelFamily::CiRis, DataSource::FreeSpace);
    REQUIRE(o2i_ci != nullptr);
    CHECK(o2i_ci->values == std::vector<double>{46.06, 2.0});

    CHECK(ci_reference_db(Scenario::Outdoor) == 21.38);
    CHECK(ci_reference_db(Scenario::Indoor) == 26.97);
    CHECK(ci_reference_db(Scenario::O2I) == 46.06);
}

TEST_CASE("codebooks round trip through the bit-string format")
{
    RisConfiguration ris = default_ris();
    MeasurementPoint p{6.0, 8.0, 45.0, 180.0, 45.0, 0.0, Scenario::Outdoor,
                       Mode::IntelligentRis, "cb"};
    PhaseProfile prof = ideal_phase_profile(p, ris, ris.center_frequency);
    ThresholdSweepResult sweep = best_threshold_codebook(prof, ris, {6.0, 8.0, 45.0, 45.0});

    Codebook loaded = round_trip(
        sweep.codebook, [](const Codebook &v, std::ostream &os) { save_codebook(v, os); },
        [](std::istream &is) { return load_codebook(is); });
    CHECK(loaded.rows == sweep.codebook.rows);
    CHECK(loaded.cols == sweep.codebook.cols);
    CHECK(loaded.bits == sweep.codebook.bits);
    CHECK(loaded.threshold == sweep.codebook.threshold);
    CHECK(loaded.target.d1 == 6.0);
    CHECK(loaded.target.theta_r == 45.0);

    std::istringstream bad("rischan.codebook v1\nsize 2 2\ntarget 1 1 0 0\nthreshold 0\n"
                           "bits 01\nbits 012\n");
    CHECK_THROWS_AS(load_codebook(bad), ParseError);
}

TEST_CASE("profiles and component lists export as plain plot columns")
{
    SynthesisConfig cfg;
    FrequencySweep s = synth_sweep_from_paths({{40e-9, 1.0, 0.0}, {90e-9, 0.5, 0.0}}, cfg, "p");
    PowerDelayProfile pdp = compute_pdp(s);
    auto mpcs = detect_mpcs(pdp);

    std::ostringstream pdp_os;
    save_pdp_text(pdp, pdp_os);
    std::istringstream pdp_is(pdp_os.str());
    std::string header;
    std::getline(pdp_is, header);
    CHECK(header == "# delay_ns power_db");
    double delay, power;
    std::size_t lines = 0;
    while (pdp_is >> delay >> power)
        ++lines;
    CHECK(lines == pdp.powers_db.size());

    std::ostringstream mpc_os;
    save_mpcs_text(mpcs, mpc_os);
    std::istringstream mpc_is(mpc_os.str());
    std::getline(mpc_is, header);
    CHECK(header == "# index delay_ns power_db");
    std::size_t idx;
    lines = 0;
    while (mpc_is >> idx >> delay >> power)
    {
        CHECK(idx == lines);
        ++lines;
    }
    CHECK(lines == mpcs.size());
}

TEST_CASE("shortest round-trip decimal form is bit-faithful")
{
    Rng rng(77);
    for (int i = 0; i < 1000; ++i)
    {
        double v = (rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform(-30.0, 30.0));
        CHECK(parse_double(format_double(v), 0) == v);
    }
    CHECK(parse_double(format_double(0.0), 0) == 0.0);
    CHECK_THROWS_AS(parse_double("fish", 3), ParseError);
}
