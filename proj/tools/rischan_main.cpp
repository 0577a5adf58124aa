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
#include "rischan/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace rischan;

VariableMask parse_mask(const std::string &arg)
{
    VariableMask mask{false, false, false, false};
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item == "d1")
            mask.d1 = true;
        else if (item == "d2")
            mask.d2 = true;
        else if (item == "theta_t")
            mask.theta_t = true;
        else if (item == "theta_r")
            mask.theta_r = true;
        else
            throw CLI::ValidationError("--mask", "unknown variable '" + item + "'");
    }
    if (mask.active_count() == 0)
        throw CLI::ValidationError("--mask", "at least one variable required");
    return mask;
}

// "lo1,lo2,lo3,lo4,lo5:hi1,...,hi5"
FitBounds parse_bounds(const std::string &arg)
{
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--bounds", "expected <5 lower>:<5 upper>");
    FitBounds b;
    for (int half = 0; half < 2; ++half)
    {
        std::stringstream ss(half == 0 ? arg.substr(0, colon) : arg.substr(colon + 1));
        std::string item;
        int i = 0;
        while (std::getline(ss, item, ','))
        {
            if (i >= 5)
                throw CLI::ValidationError("--bounds", "exactly 5 values per side");
            double v = std::stod(item);
            (half == 0 ? b.lower : b.upper)[std::size_t(i)] = v;
            ++i;
        }
        if (i != 5)
            throw CLI::ValidationError("--bounds", "exactly 5 values per side");
    }
    return b;
}

void print_fit(const FitSummary &summary)
{
    const ModelParams &p = summary.record.fit.params;
    std::printf("fit %s / %s: intercept %.4f exp_d1 %.4f exp_d2 %.4f exp_theta_t %.4f "
                "exp_theta_r %.4f  (sf sigma %.3f dB, %d iterations%s)\n",
                to_string(p.family), to_string(summary.record.scenario), p.alpha_or_ref, p.exp_d1,
                p.exp_d2, p.exp_theta_t, p.exp_theta_r, summary.record.fit.sf_sigma,
                summary.record.fit.iterations,
                summary.record.fit.converged ? "" : ", NOT CONVERGED");
    if (summary.reference_diff)
    {
        std::printf("  %-12s %-12s %12s %12s %9s\n", "source", "parameter", "fitted", "reference",
                    "delta");
        for (const auto &row : summary.reference_diff->rows)
            std::printf("  %-12s %-12s %12s %12s %9s\n", row[0].c_str(), row[1].c_str(),
                        row[2].c_str(), row[3].c_str(), row[4].c_str());
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"synthesize, post-process, fit and report RIS-assisted channel measurements"};
    app.set_version_flag("--version", rischan::version_string);
    app.require_subcommand(1);

    // simulate
    SimulateOptions sim;
    std::uint64_t seed = 1;
    bool seed_given = false;
    double shadow_sigma = 0.0;
    bool shadow_given = false;
    bool multipath_flag = false;
    auto *sim_cmd = app.add_subcommand(
        "simulate", "synthesize a sweep dataset for a campaign (one record per grid point)");
    sim_cmd->add_option("--campaign", sim.campaign,
                        "campaign file, or builtin:<scenario>:<mode> "
                        "(scenario: outdoor|indoor|o2i, mode: without|specular|intelligent)")
        ->required();
    sim_cmd->add_option("--synth", sim.synth_config_path, "synthesis config file (.synth)");
    sim_cmd->add_option("--seed", seed, "override the synthesis seed")
        ->trigger_on_parse()
        ->each([&](const std::string &) { seed_given = true; });
    sim_cmd->add_option("--shadow-sigma", shadow_sigma, "override shadow fading sigma [dB]")
        ->each([&](const std::string &) { shadow_given = true; });
    sim_cmd->add_flag("--multipath", multipath_flag, "append the scenario multipath template");
    sim_cmd->add_option("--out", sim.out, "output .sweeps path")->required();

    // process
    ProcessOptions proc;
    auto *proc_cmd = app.add_subcommand(
        "process", "post-process sweeps into per-point PL / PDP / delay-spread results");
    proc_cmd->add_option("--sweeps", proc.sweeps, "input .sweeps file")->required();
    proc_cmd->add_option("--cal", proc.calibration, "calibration .cal file");
    proc_cmd->add_option("--gamma-p", proc.gamma_p_db, "peak-relative MPC gate [dB]")
        ->capture_default_str();
    proc_cmd->add_option("--gamma-n", proc.gamma_n_db, "noise-relative MPC gate [dB]")
        ->capture_default_str();
    proc_cmd->add_option("--gt", proc.gt_dbi, "Tx antenna gain [dBi]")->capture_default_str();
    proc_cmd->add_option("--gr", proc.gr_dbi, "Rx antenna gain [dBi]")->capture_default_str();
    proc_cmd->add_option("--out", proc.out, "output results .table path")->required();

    // fit
    FitCliOptions fit;
    std::string family_arg = "fi";
    std::string mask_arg, bounds_arg, mode_arg = "intelligent";
    auto *fit_cmd =
        app.add_subcommand("fit", "fit the cascaded FI/CI models to processed results");
    fit_cmd->add_option("--results", fit.results, "processed results .table")->required();
    fit_cmd->add_option("--family", family_arg, "fi | ci")->capture_default_str();
    fit_cmd->add_option("--mask", mask_arg,
                        "comma list of active variables (default from scenario), e.g. d1,d2");
    fit_cmd->add_option("--bounds", bounds_arg,
                        "box bounds '<5 lower>:<5 upper>' in intercept,d1,d2,theta_t,theta_r "
                        "order (default from family/scenario)");
    fit_cmd->add_option("--mode", mode_arg, "rows to fit: without|specular|intelligent|all")
        ->capture_default_str();
    fit_cmd->add_option("--out", fit.out, "output .fit path")->required();

    // report
    ReportOptions rep;
    auto *rep_cmd = app.add_subcommand("report", "emit plot-ready bundles and a summary table");
    rep_cmd->add_option("--fit", rep.fits, "fit files")->take_all();
    rep_cmd->add_option("--results", rep.results, "processed results tables")->take_all();
    rep_cmd->add_option("--sweeps", rep.sweeps, "sweep datasets (enables PDP bundles)")
        ->take_all();
    rep_cmd->add_option("--out", rep.out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (sim_cmd->parsed())
        {
            if (seed_given)
                sim.seed = seed;
            if (shadow_given)
                sim.shadow_sigma_db = shadow_sigma;
            if (multipath_flag)
                sim.multipath = true;
            auto summary = run_simulate(sim);
            std::printf("simulate: %zu records -> %s (calibration offset %.4f dB)\n",
                        summary.points, sim.out.c_str(), summary.calibration_offset_db);
        }
        else if (proc_cmd->parsed())
        {
            auto summary = run_process(proc);
            std::printf("process: %zu records -> %s\n", summary.records, proc.out.c_str());
        }
        else if (fit_cmd->parsed())
        {
            fit.family = model_family_from_string(family_arg);
            if (!mask_arg.empty())
                fit.mask = parse_mask(mask_arg);
            if (!bounds_arg.empty())
                fit.bounds = parse_bounds(bounds_arg);
            if (mode_arg == "all")
                fit.mode_filter.reset();
            else
                fit.mode_filter = mode_from_string(mode_arg);
            print_fit(run_fit(fit));
        }
        else if (rep_cmd->parsed())
        {
            auto summary = run_report(rep);
            std::printf("report: %zu files -> %s\n", summary.outputs.size(),
                        rep.out_dir.c_str());
        }
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "rischan: %s\n", e.what());
        return 1;
    }
    return 0;
}
