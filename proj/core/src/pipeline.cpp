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

#include "rischan/pipeline.hpp"

#include "rischan/rng.hpp"
#include "rischan/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace rischan {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// removes this run's outputs unless release() was reached
class OutputGuard
{
  public:
    ~OutputGuard()
    {
        if (released_)
            return;
        for (const auto &p : paths_)
        {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
    void add(const std::string &p) { paths_.push_back(p); }
    void release() { released_ = true; }
    const std::vector<std::string> &paths() const { return paths_; }

  private:
    std::vector<std::string> paths_;
    bool released_ = false;
};

std::string stem_of(const std::string &path)
{
    fs::path p(path);
    return (p.parent_path() / p.stem()).string();
}

void write_manifest(OutputGuard &guard, const std::string &out_path, const std::string &subcommand,
                    const json &inputs, const json &options)
{
    json m;
    m["tool"] = "rischan";
    m["version"] = version_string;
    m["subcommand"] = subcommand;
    m["inputs"] = inputs;
    m["options"] = options;
    m["outputs"] = guard.paths();
    std::string path = out_path + ".manifest.json";
    write_file_atomic(path, m.dump(2) + "\n");
    guard.add(path);
}

// campaign argument: a file path or builtin:<scenario>:<mode>
CampaignSpec resolve_campaign(const std::string &arg)
{
    if (arg.rfind("builtin:", 0) == 0)
    {
        std::string rest = arg.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("campaign: expected builtin:<scenario>:<mode>");
        return builtin_campaign(scenario_from_string(rest.substr(0, colon)),
                                mode_from_string(rest.substr(colon + 1)));
    }
    return load_campaign_file(arg);
}

template <typename Fn> void parallel_for(std::size_t n, Fn &&fn)
{
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || n < 32)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    for (auto &t : pool)
        t.join();
}

double normal_cdf(double x, double mu, double sigma)
{
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

json synth_config_json(const SynthesisConfig &c)
{
    json j;
    j["seed"] = c.seed;
    j["k"] = c.k;
    j["f_start"] = c.f_start;
    j["f_stop"] = c.f_stop;
    j["gt_dbi"] = c.gt_dbi;
    j["gr_dbi"] = c.gr_dbi;
    j["shadow_sigma_db"] = c.shadow_sigma_db;
    j["without_ris_excess_db"] = c.without_ris_excess_db;
    j["sweep_threshold"] = c.sweep_threshold;
    j["multipath"] = c.multipath;
    j["noise_rel_db"] = std::isfinite(c.noise_rel_db) ? json(c.noise_rel_db) : json("off");
    return j;
}

} // namespace

// ---- synthesis configs ----------------------------------------------------

void save_synth_config(const SynthesisConfig &config, std::ostream &os)
{
    os << "rischan.synth v1\n";
    os << "seed " << config.seed << '\n';
    os << "k " << config.k << '\n';
    os << "band " << format_double(config.f_start) << ' ' << format_double(config.f_stop) << '\n';
    os << "gt " << format_double(config.gt_dbi) << '\n';
    os << "gr " << format_double(config.gr_dbi) << '\n';
    os << "shadow_sigma " << format_double(config.shadow_sigma_db) << '\n';
    os << "without_ris_excess " << format_double(config.without_ris_excess_db) << '\n';
    os << "sweep_threshold " << (config.sweep_threshold ? 1 : 0) << '\n';
    os << "multipath " << (config.multipath ? 1 : 0) << '\n';
    if (std::isfinite(config.noise_rel_db))
        os << "noise_rel_db " << format_double(config.noise_rel_db) << '\n';
}

SynthesisConfig load_synth_config(std::istream &is)
{
    SynthesisConfig config;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (!header_seen)
        {
            std::string ver;
            ss >> ver;
            if (key != "rischan.synth" || ver != "v1")
                throw ParseError("expected 'rischan.synth v1' header", line_no);
            header_seen = true;
            continue;
        }
        std::string a, b;
        ss >> a;
        if (key == "band")
            ss >> b;
        if (key == "seed")
            config.seed = std::stoull(a);
        else if (key == "k")
            config.k = std::stoul(a);
        else if (key == "band")
        {
            config.f_start = parse_double(a, line_no);
            config.f_stop = parse_double(b, line_no);
        }
        else if (key == "gt")
            config.gt_dbi = parse_double(a, line_no);
        else if (key == "gr")
            config.gr_dbi = parse_double(a, line_no);
        else if (key == "shadow_sigma")
            config.shadow_sigma_db = parse_double(a, line_no);
        else if (key == "without_ris_excess")
            config.without_ris_excess_db = parse_double(a, line_no);
        else if (key == "sweep_threshold")
            config.sweep_threshold = a == "1";
        else if (key == "multipath")
            config.multipath = a == "1";
        else if (key == "noise_rel_db")
            config.noise_rel_db = parse_double(a, line_no);
        else
            throw ParseError("unrecognized synth config key '" + key + "'", line_no);
    }
    if (!header_seen)
        throw ParseError("empty synth config", 1);
    config.validate();
    return config;
}

SynthesisConfig load_synth_config_file(const std::string &path)
{
    std::istringstream is(read_file(path));
    return load_synth_config(is);
}

void save_synth_config_file(const SynthesisConfig &config, const std::string &path)
{
    std::ostringstream os;
    save_synth_config(config, os);
    write_file_atomic(path, os.str());
}

// ---- simulate --------------------------------------------------------------

SimulateSummary run_simulate(const SimulateOptions &options)
{
    if (options.out.empty())
        throw std::invalid_argument("simulate: output path required");

    CampaignSpec spec = resolve_campaign(options.campaign);
    SynthesisConfig config;
    if (!options.synth_config_path.empty())
        config = load_synth_config_file(options.synth_config_path);
    if (options.seed)
        config.seed = *options.seed;
    if (options.shadow_sigma_db)
        config.shadow_sigma_db = *options.shadow_sigma_db;
    if (options.multipath)
        config.multipath = *options.multipath;
    config.validate();

    RisConfiguration ris = default_ris();
    CampaignGrid grid = build_campaign_grid(spec);

    SweepDataset ds;
    ds.f_start = config.f_start;
    ds.f_stop = config.f_stop;
    ds.k = config.k;
    ds.records.resize(grid.points.size());
    parallel_for(grid.points.size(), [&](std::size_t i) {
        ds.records[i].point = grid.points[i];
        ds.records[i].sweep = synth_sweep(grid.points[i], config, ris);
    });

    OutputGuard guard;
    save_sweeps_file(ds, options.out);
    guard.add(options.out);

    SimulateSummary summary;
    summary.points = ds.records.size();
    summary.calibration_offset_db = calibration_offset_db(ris, config.gt_dbi, config.gr_dbi);

    json inputs;
    inputs["campaign"] = options.campaign;
    if (!options.synth_config_path.empty())
        inputs["synth_config"] = options.synth_config_path;
    json opt = synth_config_json(config);
    opt["calibration_offset_db"] = summary.calibration_offset_db;
    opt["grid_points"] = grid.points.size();
    opt["empty_range_warning"] = grid.empty_range_warning;
    write_manifest(guard, options.out, "simulate", inputs, opt);

    guard.release();
    summary.outputs = guard.paths();
    return summary;
}

// ---- process ---------------------------------------------------------------

ProcessSummary run_process(const ProcessOptions &options)
{
    if (options.out.empty())
        throw std::invalid_argument("process: output path required");

    SweepDataset ds = load_sweeps_file(options.sweeps);
    std::optional<CalibrationProfile> cal;
    if (!options.calibration.empty())
    {
        cal = load_calibration_file(options.calibration);
        if (cal->system_response.size() != ds.k)
            throw std::invalid_argument("process: calibration length " +
                                        std::to_string(cal->system_response.size()) +
                                        " does not match sweep k " + std::to_string(ds.k));
    }

    struct Row
    {
        double pl_db, raw_db, rms_ns, noise_db, thr_db;
        std::size_t n_mpc;
    };
    std::vector<Row> rows(ds.records.size());
    parallel_for(ds.records.size(), [&](std::size_t i) {
        FrequencySweep sweep =
            cal ? calibrate(ds.records[i].sweep, *cal) : ds.records[i].sweep;
        auto pl = path_loss(sweep, options.gt_dbi, options.gr_dbi);
        PowerDelayProfile pdp = compute_pdp(sweep);
        auto mpcs = detect_mpcs(pdp, options.gamma_p_db, options.gamma_n_db);
        double rms_ns = mpcs.empty() ? NAN : rms_delay_spread(mpcs) * 1e9;
        rows[i] = {pl.pl_db, pl.raw_db, rms_ns, pdp.noise_floor_db, pdp.threshold_db,
                   mpcs.size()};
    });

    Table results;
    results.title = "processed sweep results";
    results.notes.push_back("source " + options.sweeps);
    results.notes.push_back("gamma_p " + format_double(options.gamma_p_db) + " gamma_n " +
                            format_double(options.gamma_n_db));
    results.columns = {"point_id", "scenario", "mode",       "d1",        "d2",
                       "theta_t",  "theta_r",  "pl_db",      "raw_db",    "rms_ds_ns",
                       "n_mpc",    "noise_db", "threshold_db", "coherence_bw_khz"};
    for (std::size_t i = 0; i < ds.records.size(); ++i)
    {
        const MeasurementPoint &p = ds.records[i].point;
        const Row &r = rows[i];
        std::string cb = r.rms_ns > 0.0
                             ? format_double(coherence_bandwidth(r.rms_ns * 1e-9) / 1e3)
                             : "nan";
        results.rows.push_back({p.point_id, to_string(p.scenario), to_string(p.mode),
                                format_double(p.d1), format_double(p.d2),
                                format_double(p.eaoa_t), format_double(p.eaod_r),
                                format_double(r.pl_db), format_double(r.raw_db),
                                format_double(r.rms_ns), std::to_string(r.n_mpc),
                                format_double(r.noise_db), format_double(r.thr_db), cb});
    }

    // per-mode delay-spread aggregates
    Table agg;
    agg.title = "rms delay spread aggregates";
    agg.columns = {"scenario", "mode", "count", "mu_ns", "sigma_ns"};
    std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
    for (std::size_t i = 0; i < ds.records.size(); ++i)
        if (std::isfinite(rows[i].rms_ns))
            groups[{to_string(ds.records[i].point.scenario), to_string(ds.records[i].point.mode)}]
                .push_back(rows[i].rms_ns);
    for (const auto &[key, values] : groups)
    {
        double mu = 0.0;
        for (double v : values)
            mu += v;
        mu /= double(values.size());
        double sd = 0.0;
        if (values.size() > 1)
        {
            for (double v : values)
                sd += (v - mu) * (v - mu);
            sd = std::sqrt(sd / double(values.size() - 1));
        }
        agg.rows.push_back({key.first, key.second, std::to_string(values.size()),
                            format_double(mu), format_double(sd)});
    }

    OutputGuard guard;
    save_table_file(results, options.out);
    guard.add(options.out);
    std::string agg_path = stem_of(options.out) + ".rmsds.table";
    save_table_file(agg, agg_path);
    guard.add(agg_path);

    json inputs;
    inputs["sweeps"] = options.sweeps;
    if (!options.calibration.empty())
        inputs["calibration"] = options.calibration;
    json opt;
    opt["gamma_p_db"] = options.gamma_p_db;
    opt["gamma_n_db"] = options.gamma_n_db;
    opt["gt_dbi"] = options.gt_dbi;
    opt["gr_dbi"] = options.gr_dbi;
    write_manifest(guard, options.out, "process", inputs, opt);

    guard.release();
    ProcessSummary summary;
    summary.records = ds.records.size();
    summary.outputs = guard.paths();
    return summary;
}

// ---- fit -------------------------------------------------------------------

namespace {

VariableMask default_mask(Scenario scenario)
{
    switch (scenario)
    {
    case Scenario::Outdoor:
        return {true, true, true, true};
    case Scenario::Indoor:
        return {true, true, false, false};
    case Scenario::O2I:
        return {false, true, false, false};
    }
    return {};
}

MeasurementPoint point_from_row(const Table &t, std::size_t r)
{
    MeasurementPoint p;
    p.point_id = t.cell(r, "point_id");
    p.scenario = scenario_from_string(t.cell(r, "scenario"));
    p.mode = mode_from_string(t.cell(r, "mode"));
    p.d1 = t.number_at(r, "d1");
    p.d2 = t.number_at(r, "d2");
    p.eaoa_t = t.number_at(r, "theta_t");
    p.eaod_r = t.number_at(r, "theta_r");
    return p;
}

const char *slot_names[5] = {"intercept", "exp_d1", "exp_d2", "exp_theta_t", "exp_theta_r"};

double slot_value(const ModelParams &p, int slot)
{
    switch (slot)
    {
    case 0:
        return p.alpha_or_ref;
    case 1:
        return p.exp_d1;
    case 2:
        return p.exp_d2;
    case 3:
        return p.exp_theta_t;
    default:
        return p.exp_theta_r;
    }
}

Table diff_against_reference(Scenario scenario, const ModelParams &params)
{
    Table diff;
    diff.title = std::string("fit vs published rows ") + to_string(scenario);
    diff.notes.push_back("free-space generator calibrated to the " +
                         format_double(reference_path_loss_db) +
                         " dB close-in reference; see manifest for the offset");
    diff.columns = {"source", "parameter", "fitted", "reference", "delta"};

    for (DataSource src : {DataSource::FreeSpace, DataSource::Measurement})
    {
        const ReferenceFitRow *row = find_reference_row(scenario, params.family, src);
        if (!row)
            continue;
        std::size_t vi = 0;
        const bool active[5] = {true, row->mask.d1, row->mask.d2, row->mask.theta_t,
                                row->mask.theta_r};
        for (int slot = 0; slot < 5; ++slot)
        {
            if (!active[slot])
                continue;
            double ref = row->values[vi++];
            double local = slot_value(params, slot);
            diff.rows.push_back({to_string(src), slot_names[slot], format_double(local),
                                 format_double(ref), format_double(local - ref)});
        }
    }
    return diff;
}

} // namespace

FitSummary run_fit(const FitCliOptions &options)
{
    if (options.out.empty())
        throw std::invalid_argument("fit: output path required");

    Table results = load_table_file(options.results);

    std::vector<PlObservation> dataset;
    std::set<Scenario> scenarios;
    for (std::size_t r = 0; r < results.rows.size(); ++r)
    {
        MeasurementPoint p = point_from_row(results, r);
        if (options.mode_filter && p.mode != *options.mode_filter)
            continue;
        scenarios.insert(p.scenario);
        dataset.push_back({std::move(p), results.number_at(r, "pl_db")});
    }
    if (dataset.empty())
        throw std::invalid_argument("fit: no rows left after mode filtering");
    if (scenarios.size() > 1)
        throw std::invalid_argument("fit: results mix scenarios; fit them separately");
    Scenario scenario = *scenarios.begin();

    VariableMask mask = options.mask.value_or(default_mask(scenario));
    FitBounds bounds;
    if (options.bounds)
        bounds = *options.bounds;
    else
    {
        auto def = default_fit_bounds(options.family, scenario);
        bounds.lower = def.lower;
        bounds.upper = def.upper;
    }

    int needed = mask.active_count() + 1;
    if (int(dataset.size()) < needed)
        throw std::invalid_argument("fit: dataset has " + std::to_string(dataset.size()) +
                                    " usable points but the model needs at least " +
                                    std::to_string(needed));

    FitRecord record;
    record.scenario = scenario;
    record.fit = fit_model(dataset, options.family, mask, bounds);
    record.bounds = bounds;
    record.n_points = dataset.size();
    record.calibration_offset_db = calibration_offset_db(default_ris());

    OutputGuard guard;
    save_fit_file(record, options.out);
    guard.add(options.out);

    std::ostringstream residuals;
    residuals << "point_id,residual_db\n";
    for (std::size_t i = 0; i < dataset.size(); ++i)
        residuals << dataset[i].point.point_id << ',' << format_double(record.fit.residuals[i])
                  << '\n';
    std::string residuals_path = stem_of(options.out) + ".residuals.csv";
    write_file_atomic(residuals_path, residuals.str());
    guard.add(residuals_path);

    FitSummary summary;
    summary.record = record;
    if (find_reference_row(scenario, options.family, DataSource::FreeSpace))
    {
        Table diff = diff_against_reference(scenario, record.fit.params);
        std::string diff_path = stem_of(options.out) + ".diff.table";
        save_table_file(diff, diff_path);
        guard.add(diff_path);
        summary.reference_diff = std::move(diff);
    }

    json inputs;
    inputs["results"] = options.results;
    json opt;
    opt["family"] = to_string(options.family);
    opt["scenario"] = to_string(scenario);
    opt["mode_filter"] = options.mode_filter ? to_string(*options.mode_filter) : "all";
    opt["mask"] = json::array();
    if (mask.d1)
        opt["mask"].push_back("d1");
    if (mask.d2)
        opt["mask"].push_back("d2");
    if (mask.theta_t)
        opt["mask"].push_back("theta_t");
    if (mask.theta_r)
        opt["mask"].push_back("theta_r");
    opt["bounds_lower"] = bounds.lower;
    opt["bounds_upper"] = bounds.upper;
    opt["converged"] = record.fit.converged;
    opt["calibration_offset_db"] = record.calibration_offset_db;
    write_manifest(guard, options.out, "fit", inputs, opt);

    if (!record.fit.converged)
        throw std::runtime_error("fit: solver did not converge within the iteration budget");

    guard.release();
    summary.outputs = guard.paths();
    return summary;
}

// ---- report ------------------------------------------------------------------

namespace {

struct ResultRow
{
    MeasurementPoint point;
    double pl_db;
    double rms_ns;
};

void emit_cdf_table(const std::string &path, const std::string &title,
                    const std::string &value_column, std::vector<double> values, double mu,
                    double sigma, OutputGuard &guard)
{
    std::sort(values.begin(), values.end());
    Table t;
    t.title = title;
    t.columns = {value_column, "empirical_cdf", "gaussian_cdf"};
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        double g = sigma > 0.0 ? normal_cdf(values[i], mu, sigma) : (values[i] >= mu ? 1.0 : 0.0);
        t.rows.push_back({format_double(values[i]), format_double(double(i + 1) / values.size()),
                          format_double(g)});
    }
    save_table_file(t, path);
    guard.add(path);
}

} // namespace

ReportSummary run_report(const ReportOptions &options)
{
    if (options.out_dir.empty())
        throw std::invalid_argument("report: output directory required");
    fs::create_directories(options.out_dir);
    auto out_path = [&](const std::string &name) {
        return (fs::path(options.out_dir) / name).string();
    };

    OutputGuard guard;
    Table summary;
    summary.title = "report summary";
    summary.columns = {"kind", "scenario", "family_or_mode", "intercept_or_mu", "sigma", "extra"};

    // fitted models and their shadow-fading CDFs
    for (const auto &fit_path : options.fits)
    {
        FitRecord rec = load_fit_file(fit_path);
        const ModelParams &p = rec.fit.params;
        summary.rows.push_back({"fit", to_string(rec.scenario), to_string(p.family),
                                format_double(p.alpha_or_ref), format_double(rec.fit.sf_sigma),
                                rec.fit.converged ? "converged" : "not-converged"});

        std::string res_path = stem_of(fit_path) + ".residuals.csv";
        if (fs::exists(res_path))
        {
            std::istringstream is(read_file(res_path));
            std::string line;
            std::getline(is, line); // header
            std::vector<double> residuals;
            std::size_t line_no = 1;
            while (std::getline(is, line))
            {
                ++line_no;
                auto comma = line.rfind(',');
                if (comma == std::string::npos || comma + 1 >= line.size())
                    continue;
                residuals.push_back(parse_double(line.substr(comma + 1), line_no));
            }
            if (!residuals.empty())
                emit_cdf_table(out_path(std::string("sf_cdf.") + to_string(rec.scenario) + "." +
                                        to_string(p.family) + ".table"),
                               "shadow fading cdf", "sf_db", residuals, rec.fit.sf_mu,
                               rec.fit.sf_sigma, guard);
        }
    }

    // processed results: PL-vs-distance series and delay-spread CDFs
    std::map<Scenario, std::map<Mode, std::vector<ResultRow>>> by_scenario;
    for (const auto &res_path : options.results)
    {
        Table t = load_table_file(res_path);
        for (std::size_t r = 0; r < t.rows.size(); ++r)
        {
            ResultRow row{point_from_row(t, r), t.number_at(r, "pl_db"),
                          t.number_at(r, "rms_ds_ns")};
            by_scenario[row.point.scenario][row.point.mode].push_back(std::move(row));
        }
    }

    for (const auto &[scenario, modes] : by_scenario)
    {
        // PL vs d2 at the 45/45 cut, d1 slice with the most coverage (6 m preferred)
        std::map<double, std::size_t> d1_votes;
        for (const auto &[mode, rows] : modes)
            for (const auto &r : rows)
                if (r.point.eaoa_t == 45.0 && r.point.eaod_r == 45.0)
                    ++d1_votes[r.point.d1];
        if (!d1_votes.empty())
        {
            double d1_slice = d1_votes.count(6.0) ? 6.0 : d1_votes.begin()->first;
            std::map<double, std::array<double, 3>> series; // d2 -> pl per mode
            for (const auto &[mode, rows] : modes)
                for (const auto &r : rows)
                    if (r.point.eaoa_t == 45.0 && r.point.eaod_r == 45.0 &&
                        r.point.d1 == d1_slice)
                    {
                        auto it = series.try_emplace(r.point.d2,
                                                     std::array<double, 3>{NAN, NAN, NAN});
                        it.first->second[std::size_t(mode)] = r.pl_db;
                    }
            Table t;
            t.title = std::string("pl vs d2 ") + to_string(scenario);
            t.notes.push_back("theta_t 45 theta_r 45 d1 " + format_double(d1_slice));
            t.columns = {"d2", "pl_without", "pl_specular", "pl_intelligent", "pl_free_space"};
            RisConfiguration ris = default_ris();
            for (const auto &[d2, pls] : series)
                t.rows.push_back(
                    {format_double(d2), format_double(pls[0]), format_double(pls[1]),
                     format_double(pls[2]),
                     format_double(free_space_pl_ris_db(d1_slice, d2, 45.0, 45.0, ris))});
            std::string path = out_path(std::string("pl_vs_d2.") + to_string(scenario) + ".table");
            save_table_file(t, path);
            guard.add(path);
        }

        for (const auto &[mode, rows] : modes)
        {
            std::vector<double> ds_values;
            for (const auto &r : rows)
                if (std::isfinite(r.rms_ns))
                    ds_values.push_back(r.rms_ns);
            if (ds_values.empty())
                continue;
            double mu = 0.0;
            for (double v : ds_values)
                mu += v;
            mu /= double(ds_values.size());
            double sd = 0.0;
            if (ds_values.size() > 1)
            {
                for (double v : ds_values)
                    sd += (v - mu) * (v - mu);
                sd = std::sqrt(sd / double(ds_values.size() - 1));
            }
            summary.rows.push_back({"rms_ds", to_string(scenario), to_string(mode),
                                    format_double(mu), format_double(sd),
                                    std::to_string(ds_values.size()) + "pts"});
            emit_cdf_table(out_path(std::string("rmsds_cdf.") + to_string(scenario) + "." +
                                    to_string(mode) + ".table"),
                           "rms delay spread cdf", "rms_ds_ns", ds_values, mu, sd, guard);
        }
    }

    // sweep-level bundles: PDP evolution and magnitude vs frequency
    for (const auto &sweeps_path : options.sweeps)
    {
        SweepDataset ds = load_sweeps_file(sweeps_path);
        if (ds.records.empty())
            continue;
        Scenario scenario = ds.records.front().point.scenario;
        Mode mode = ds.records.front().point.mode;

        // PDP evolution along d1 at the 45/45 cut, d2 nearest to 8 m
        std::vector<const SweepRecord *> cut;
        for (const auto &rec : ds.records)
            if (rec.point.eaoa_t == 45.0 && rec.point.eaod_r == 45.0)
                cut.push_back(&rec);
        if (!cut.empty())
        {
            double best_d2 = cut.front()->point.d2;
            for (const auto *rec : cut)
                if (std::abs(rec->point.d2 - 8.0) < std::abs(best_d2 - 8.0))
                    best_d2 = rec->point.d2;
            std::map<double, const SweepRecord *> by_d1;
            for (const auto *rec : cut)
                if (rec->point.d2 == best_d2)
                    by_d1[rec->point.d1] = rec;

            Table t;
            t.title = std::string("pdp evolution ") + to_string(scenario) + " " + to_string(mode);
            t.notes.push_back("theta 45/45 d2 " + format_double(best_d2));
            t.columns = {"delay_ns"};
            std::vector<PowerDelayProfile> pdps;
            for (const auto &[d1, rec] : by_d1)
            {
                t.columns.push_back("pdp_db_d1_" + format_double(d1));
                pdps.push_back(compute_pdp(rec->sweep));
            }
            if (!pdps.empty())
            {
                for (std::size_t bin = 0; bin < pdps.front().powers_db.size(); ++bin)
                {
                    std::vector<std::string> row{
                        format_double(pdps.front().delay_at(bin) * 1e9)};
                    for (const auto &pdp : pdps)
                        row.push_back(format_double(pdp.powers_db[bin]));
                    t.rows.push_back(std::move(row));
                }
                std::string path = out_path(std::string("pdp_evolution.") + to_string(scenario) +
                                            "." + to_string(mode) + ".table");
                save_table_file(t, path);
                guard.add(path);
            }
        }

        // magnitude vs frequency at the point nearest (d1, d2) = (10, 10)
        const SweepRecord *pick = nullptr;
        double best = 1e300;
        for (const auto &rec : ds.records)
        {
            if (rec.point.eaoa_t != 45.0 || rec.point.eaod_r != 45.0)
                continue;
            double cost = std::abs(rec.point.d1 - 10.0) + std::abs(rec.point.d2 - 10.0);
            if (cost < best)
            {
                best = cost;
                pick = &rec;
            }
        }
        if (pick)
        {
            Table t;
            t.title = std::string("sweep magnitude ") + to_string(scenario) + " " +
                      to_string(mode);
            t.notes.push_back("point " + pick->point.point_id);
            t.columns = {"freq_hz", "mag_db"};
            for (std::size_t i = 0; i < pick->sweep.samples.size(); ++i)
                t.rows.push_back(
                    {format_double(pick->sweep.frequency_at(i)),
                     format_double(20.0 * std::log10(std::abs(pick->sweep.samples[i])))});
            std::string path = out_path(std::string("sweep_magnitude.") + to_string(scenario) +
                                        "." + to_string(mode) + ".table");
            save_table_file(t, path);
            guard.add(path);
        }
    }

    std::string summary_path = out_path("summary.table");
    save_table_file(summary, summary_path);
    guard.add(summary_path);

    json inputs;
    inputs["fits"] = options.fits;
    inputs["results"] = options.results;
    inputs["sweeps"] = options.sweeps;
    write_manifest(guard, (fs::path(options.out_dir) / "report").string(), "report", inputs,
                   json::object());

    guard.release();
    ReportSummary rep;
    rep.outputs = guard.paths();
    return rep;
}

}
