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

#ifndef RISCHAN_CAMPAIGN_IO_HPP
#define RISCHAN_CAMPAIGN_IO_HPP

#include "rischan/dsp.hpp"
#include "rischan/fitting.hpp"
#include "rischan/geometry.hpp"
#include "rischan/reference_tables.hpp"
#include "rischan/ris_array.hpp"
#include "rischan/sweep.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rischan {

// Line-oriented plain-text formats with explicit version tags. Doubles are
// serialized in shortest round-trip form, so save/load is bit-faithful.
//
// File kinds: .campaign (config), .sweeps (records), .cal (calibration),
// .fit (results), .table (reference / report tables).

struct ParseError : std::runtime_error
{
    ParseError(const std::string &msg, std::size_t line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
          line(line_number)
    {
    }
    // message already carries its location (used when adding file context)
    struct Located
    {
    };
    ParseError(const std::string &full_message, std::size_t line_number, Located)
        : std::runtime_error(full_message), line(line_number)
    {
    }
    std::size_t line;
};

// ---- campaign configs ----------------------------------------------------

void save_campaign(const CampaignSpec &spec, std::ostream &os);
CampaignSpec load_campaign(std::istream &is); // validates; throws ParseError

// ---- sweep datasets --------------------------------------------------------

struct SweepRecord
{
    MeasurementPoint point;
    FrequencySweep sweep;
};

struct SweepDataset
{
    double f_start = 2.5e9;
    double f_stop = 2.69e9;
    std::size_t k = 191;
    std::vector<SweepRecord> records;
};

void save_sweeps(const SweepDataset &ds, std::ostream &os);
// Validates counts and every point invariant; errors name the record index.
SweepDataset load_sweeps(std::istream &is);

// ---- calibration profiles --------------------------------------------------

void save_calibration(const CalibrationProfile &cal, std::ostream &os);
CalibrationProfile load_calibration(std::istream &is);

// ---- fit results -----------------------------------------------------------

struct FitRecord
{
    Scenario scenario = Scenario::Outdoor;
    FitResult fit;
    FitBounds bounds;
    std::size_t n_points = 0;
    // generator note: calibration offset the synthetic data was produced with
    double calibration_offset_db = 0.0;
};

void save_fit(const FitRecord &rec, std::ostream &os);
FitRecord load_fit(std::istream &is);

// ---- codebooks -----------------------------------------------------------

// Row-major bit strings under an (M, N, target, threshold) header.
void save_codebook(const Codebook &cb, std::ostream &os);
Codebook load_codebook(std::istream &is);

// ---- plain plot exports ----------------------------------------------------

// Two columns (delay ns, power dB), gnuplot-friendly.
void save_pdp_text(const PowerDelayProfile &pdp, std::ostream &os);

// Three columns (index, delay ns, power dB).
void save_mpcs_text(const std::vector<Mpc> &mpcs, std::ostream &os);

// ---- generic column tables --------------------------------------------------

struct Table
{
    std::string title;
    std::vector<std::string> notes; // provenance
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string &name) const; // throws if absent
    double number_at(std::size_t row, const std::string &column) const;
    const std::string &cell(std::size_t row, const std::string &column) const;
};

void save_table(const Table &table, std::ostream &os);
Table load_table(std::istream &is);

// Published fitting rows wrapped as one table per scenario, for diffing
// against locally produced fits.
std::vector<Table> embed_reference_tables();

// ---- path helpers ----------------------------------------------------------

// Atomic write: the file appears under its final name only when complete.
void write_file_atomic(const std::string &path, const std::string &contents);

std::string read_file(const std::string &path);

CampaignSpec load_campaign_file(const std::string &path);
SweepDataset load_sweeps_file(const std::string &path);
CalibrationProfile load_calibration_file(const std::string &path);
FitRecord load_fit_file(const std::string &path);
Table load_table_file(const std::string &path);

void save_campaign_file(const CampaignSpec &spec, const std::string &path);
void save_sweeps_file(const SweepDataset &ds, const std::string &path);
void save_calibration_file(const CalibrationProfile &cal, const std::string &path);
void save_fit_file(const FitRecord &rec, const std::string &path);
void save_table_file(const Table &table, const std::string &path);

// Shortest round-trip decimal form (std::to_chars).
std::string format_double(double v);
double parse_double(const std::string &token, std::size_t line);

}

#endif
