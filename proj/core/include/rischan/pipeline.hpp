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

#ifndef RISCHAN_PIPELINE_HPP
#define RISCHAN_PIPELINE_HPP

#include "rischan/campaign_io.hpp"
#include "rischan/dsp.hpp"
#include "rischan/synthesis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rischan {

// Batch front end wiring the modules together: simulate, process, fit,
// report. Each run writes its outputs atomically plus a JSON manifest
// sufficient to reproduce it; on failure, outputs of the failed run are
// removed.

// ---- synthesis configs (CLI config document) ----------------------------

void save_synth_config(const SynthesisConfig &config, std::ostream &os);
SynthesisConfig load_synth_config(std::istream &is);
SynthesisConfig load_synth_config_file(const std::string &path);
void save_synth_config_file(const SynthesisConfig &config, const std::string &path);

// ---- simulate ------------------------------------------------------------

struct SimulateOptions
{
    // path to a .campaign file, or "builtin:<scenario>:<mode>"
    std::string campaign;
    std::string synth_config_path; // optional .synth file
    std::optional<std::uint64_t> seed;
    std::optional<double> shadow_sigma_db;
    std::optional<bool> multipath;
    std::string out; // .sweeps path
};

struct SimulateSummary
{
    std::size_t points = 0;
    double calibration_offset_db = 0.0;
    std::vector<std::string> outputs;
};

SimulateSummary run_simulate(const SimulateOptions &options);

// ---- process -------------------------------------------------------------

struct ProcessOptions
{
    std::string sweeps;
    std::string calibration; // optional
    double gamma_p_db = default_gamma_p_db;
    double gamma_n_db = default_gamma_n_db;
    double gt_dbi = default_antenna_gain_dbi;
    double gr_dbi = default_antenna_gain_dbi;
    std::string out; // results .table path; per-mode aggregates in <out stem>.rmsds.table
};

struct ProcessSummary
{
    std::size_t records = 0;
    std::vector<std::string> outputs;
};

ProcessSummary run_process(const ProcessOptions &options);

// ---- fit -----------------------------------------------------------------

struct FitCliOptions
{
    std::string results;            // processed results .table
    ModelFamily family = ModelFamily::FiRis;
    std::optional<VariableMask> mask;    // default inferred from the scenario
    std::optional<FitBounds> bounds;     // default per family/scenario
    std::optional<Mode> mode_filter = Mode::IntelligentRis; // nullopt = all rows
    std::string out; // .fit path; residuals in <out stem>.residuals.csv
};

struct FitSummary
{
    FitRecord record;
    // side-by-side diff against the published rows, when available
    std::optional<Table> reference_diff;
    std::vector<std::string> outputs;
};

FitSummary run_fit(const FitCliOptions &options);

// ---- report ----------------------------------------------------------------

struct ReportOptions
{
    std::vector<std::string> fits;    // .fit files (residuals csv read alongside)
    std::vector<std::string> results; // processed results tables
    std::vector<std::string> sweeps;  // optional, enables PDP / magnitude bundles
    std::string out_dir;
};

struct ReportSummary
{
    std::vector<std::string> outputs;
};

ReportSummary run_report(const ReportOptions &options);

}

#endif
