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

#include "rischan/campaign_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rischan {

namespace {

// Tokenizing line reader shared by every loader.
class LineReader
{
  public:
    explicit LineReader(std::istream &is) : is_(is) {}

    // next non-empty line split into tokens; false at end of input
    bool next(std::vector<std::string> &tokens, std::string *raw = nullptr)
    {
        std::string line;
        while (std::getline(is_, line))
        {
            ++line_no_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            if (raw)
                *raw = line;
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok)
                tokens.push_back(tok);
            if (!tokens.empty())
                return true;
        }
        return false;
    }

    std::size_t line() const { return line_no_; }

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_no_); }

  private:
    std::istream &is_;
    std::size_t line_no_ = 0;
};

void expect_header(LineReader &reader, const std::string &kind)
{
    std::vector<std::string> tok;
    if (!reader.next(tok))
        throw ParseError("empty input, expected " + kind + " header", 1);
    if (tok.size() != 2 || tok[0] != kind)
        reader.fail("expected '" + kind + " v1' header");
    if (tok[1] != "v1")
        reader.fail("unknown " + kind + " format version '" + tok[1] + "'");
}

double to_double(LineReader &reader, const std::string &tok)
{
    return parse_double(tok, reader.line());
}

std::size_t to_size(LineReader &reader, const std::string &tok)
{
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        reader.fail("expected a non-negative integer, got '" + tok + "'");
    return v;
}

void put_samples_line(std::ostream &os, const std::vector<std::complex<double>> &samples)
{
    os << "samples";
    for (const auto &s : samples)
        os << ' ' << format_double(s.real()) << ' ' << format_double(s.imag());
    os << '\n';
}

std::vector<std::complex<double>> take_samples_line(LineReader &reader, std::size_t k,
                                                    const std::string &context)
{
    std::vector<std::string> tok;
    if (!reader.next(tok))
        reader.fail("truncated input, expected samples for " + context);
    if (tok[0] != "samples")
        reader.fail("expected 'samples' line for " + context);
    if (tok.size() != 1 + 2 * k)
        reader.fail("sample count mismatch for " + context + ": declared k " + std::to_string(k) +
                    ", got " + std::to_string((tok.size() - 1) / 2) + " complex values");
    std::vector<std::complex<double>> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = {to_double(reader, tok[1 + 2 * i]), to_double(reader, tok[2 + 2 * i])};
    return out;
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

double parse_double(const std::string &token, std::size_t line)
{
    double v = 0.0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || p != token.data() + token.size())
        throw ParseError("expected a number, got '" + token + "'", line);
    return v;
}

// ---- campaign ----------------------------------------------------------

void save_campaign(const CampaignSpec &spec, std::ostream &os)
{
    os << "rischan.campaign v1\n";
    os << "scenario " << to_string(spec.scenario) << '\n';
    os << "mode " << to_string(spec.mode) << '\n';
    os << "step " << format_double(spec.step) << '\n';
    if (spec.scenario == Scenario::O2I)
    {
        os << "fixed_d1 " << format_double(spec.fixed_d1.value_or(0.0)) << '\n';
        os << "theta_t " << format_double(spec.fixed_theta_t) << '\n';
        for (const auto &a : spec.aisles)
        {
            os << "aisle " << (a.side == AisleWalk::Side::Left ? "left" : "right") << ' '
               << format_double(a.rx_from) << ' ' << format_double(a.rx_to);
            if (a.side == AisleWalk::Side::Right)
                os << " perp " << format_double(a.perp);
            os << '\n';
        }
    }
    else
    {
        for (const auto &c : spec.cases)
            os << "case " << format_double(c.theta_t) << ' ' << format_double(c.theta_r) << " tx "
               << format_double(c.tx_from) << ' ' << format_double(c.tx_to) << " rx "
               << format_double(c.rx_from) << ' ' << format_double(c.rx_to) << '\n';
    }
}

CampaignSpec load_campaign(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.campaign");

    CampaignSpec spec;
    spec.cases.clear();
    bool have_scenario = false, have_mode = false;

    std::vector<std::string> tok;
    while (reader.next(tok))
    {
        const std::string &key = tok[0];
        if (key == "scenario" && tok.size() == 2)
        {
            spec.scenario = scenario_from_string(tok[1]);
            have_scenario = true;
        }
        else if (key == "mode" && tok.size() == 2)
        {
            spec.mode = mode_from_string(tok[1]);
            have_mode = true;
        }
        else if (key == "step" && tok.size() == 2)
            spec.step = to_double(reader, tok[1]);
        else if (key == "fixed_d1" && tok.size() == 2)
            spec.fixed_d1 = to_double(reader, tok[1]);
        else if (key == "theta_t" && tok.size() == 2)
            spec.fixed_theta_t = to_double(reader, tok[1]);
        else if (key == "aisle" && (tok.size() == 4 || tok.size() == 6))
        {
            AisleWalk a;
            if (tok[1] == "left")
                a.side = AisleWalk::Side::Left;
            else if (tok[1] == "right")
                a.side = AisleWalk::Side::Right;
            else
                reader.fail("aisle side must be 'left' or 'right'");
            a.rx_from = to_double(reader, tok[2]);
            a.rx_to = to_double(reader, tok[3]);
            if (tok.size() == 6)
            {
                if (tok[4] != "perp")
                    reader.fail("expected 'perp' in aisle line");
                a.perp = to_double(reader, tok[5]);
            }
            spec.aisles.push_back(a);
        }
        else if (key == "case" && tok.size() == 9 && tok[3] == "tx" && tok[6] == "rx")
        {
            AngleCase c;
            c.theta_t = to_double(reader, tok[1]);
            c.theta_r = to_double(reader, tok[2]);
            c.tx_from = to_double(reader, tok[4]);
            c.tx_to = to_double(reader, tok[5]);
            c.rx_from = to_double(reader, tok[7]);
            c.rx_to = to_double(reader, tok[8]);
            spec.cases.push_back(c);
        }
        else
            reader.fail("unrecognized campaign line starting with '" + key + "'");
    }

    if (!have_scenario || !have_mode)
        throw ParseError("campaign: scenario and mode are required", reader.line());
    try
    {
        spec.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ParseError(e.what(), reader.line());
    }
    return spec;
}

// ---- sweeps ----------------------------------------------------------------

void save_sweeps(const SweepDataset &ds, std::ostream &os)
{
    os << "rischan.sweeps v1\n";
    os << "band " << format_double(ds.f_start) << ' ' << format_double(ds.f_stop) << '\n';
    os << "k " << ds.k << '\n';
    os << "count " << ds.records.size() << '\n';
    for (const auto &rec : ds.records)
    {
        const MeasurementPoint &p = rec.point;
        os << "point " << p.point_id << ' ' << to_string(p.scenario) << ' ' << to_string(p.mode)
           << ' ' << format_double(p.d1) << ' ' << format_double(p.d2) << ' '
           << format_double(p.eaoa_t) << ' ' << format_double(p.eaod_r) << ' '
           << format_double(p.aaoa_t) << ' ' << format_double(p.aaod_r) << '\n';
        put_samples_line(os, rec.sweep.samples);
    }
}

SweepDataset load_sweeps(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.sweeps");

    SweepDataset ds;
    std::vector<std::string> tok;

    if (!reader.next(tok) || tok[0] != "band" || tok.size() != 3)
        reader.fail("expected 'band <f_start> <f_stop>'");
    ds.f_start = to_double(reader, tok[1]);
    ds.f_stop = to_double(reader, tok[2]);
    if (!(ds.f_stop > ds.f_start))
        reader.fail("band: f_stop must exceed f_start");

    if (!reader.next(tok) || tok[0] != "k" || tok.size() != 2)
        reader.fail("expected 'k <count>'");
    ds.k = to_size(reader, tok[1]);
    if (ds.k < 2)
        reader.fail("k must be >= 2");

    if (!reader.next(tok) || tok[0] != "count" || tok.size() != 2)
        reader.fail("expected 'count <records>'");
    std::size_t count = to_size(reader, tok[1]);

    for (std::size_t r = 0; r < count; ++r)
    {
        std::string context = "record " + std::to_string(r);
        if (!reader.next(tok))
            reader.fail("truncated input at " + context + " of " + std::to_string(count));
        if (tok[0] != "point" || tok.size() != 10)
            reader.fail("expected 'point' line with 9 fields at " + context);

        SweepRecord rec;
        rec.point.point_id = tok[1];
        rec.point.scenario = scenario_from_string(tok[2]);
        rec.point.mode = mode_from_string(tok[3]);
        rec.point.d1 = to_double(reader, tok[4]);
        rec.point.d2 = to_double(reader, tok[5]);
        rec.point.eaoa_t = to_double(reader, tok[6]);
        rec.point.eaod_r = to_double(reader, tok[7]);
        rec.point.aaoa_t = to_double(reader, tok[8]);
        rec.point.aaod_r = to_double(reader, tok[9]);
        try
        {
            validate(rec.point);
        }
        catch (const std::invalid_argument &e)
        {
            reader.fail(context + ": " + e.what());
        }

        rec.sweep.f_start = ds.f_start;
        rec.sweep.f_stop = ds.f_stop;
        rec.sweep.point_ref = rec.point.point_id;
        rec.sweep.samples = take_samples_line(reader, ds.k, context);
        ds.records.push_back(std::move(rec));
    }

    if (reader.next(tok))
        reader.fail("trailing content after the declared " + std::to_string(count) + " records");
    return ds;
}

// ---- calibration -------------------------------------------------------------

void save_calibration(const CalibrationProfile &cal, std::ostream &os)
{
    os << "rischan.cal v1\n";
    os << "band " << format_double(cal.f_start) << ' ' << format_double(cal.f_stop) << '\n';
    os << "k " << cal.system_response.size() << '\n';
    os << "source " << (cal.source.empty() ? "unspecified" : cal.source) << '\n';
    put_samples_line(os, cal.system_response);
}

CalibrationProfile load_calibration(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.cal");

    CalibrationProfile cal;
    std::vector<std::string> tok;
    std::string raw;

    if (!reader.next(tok) || tok[0] != "band" || tok.size() != 3)
        reader.fail("expected 'band <f_start> <f_stop>'");
    cal.f_start = to_double(reader, tok[1]);
    cal.f_stop = to_double(reader, tok[2]);

    if (!reader.next(tok) || tok[0] != "k" || tok.size() != 2)
        reader.fail("expected 'k <count>'");
    std::size_t k = to_size(reader, tok[1]);

    if (!reader.next(tok, &raw) || tok[0] != "source")
        reader.fail("expected 'source <label>'");
    cal.source = raw.size() > 7 ? raw.substr(7) : "";

    cal.system_response = take_samples_line(reader, k, "calibration");
    try
    {
        cal.validate();
    }
    catch (const std::invalid_argument &e)
    {
        reader.fail(e.what());
    }
    return cal;
}

// ---- fit results -------------------------------------------------------------

void save_fit(const FitRecord &rec, std::ostream &os)
{
    const ModelParams &p = rec.fit.params;
    os << "rischan.fit v1\n";
    os << "family " << to_string(p.family) << '\n';
    os << "scenario " << to_string(rec.scenario) << '\n';
    os << "mask";
    if (p.mask.d1)
        os << " d1";
    if (p.mask.d2)
        os << " d2";
    if (p.mask.theta_t)
        os << " theta_t";
    if (p.mask.theta_r)
        os << " theta_r";
    os << '\n';
    os << "reference " << format_double(p.reference.d0_1) << ' ' << format_double(p.reference.d0_2)
       << ' ' << format_double(p.reference.theta0_t) << ' ' << format_double(p.reference.theta0_r)
       << '\n';
    os << "intercept " << format_double(p.alpha_or_ref) << '\n';
    os << "exp_d1 " << format_double(p.exp_d1) << '\n';
    os << "exp_d2 " << format_double(p.exp_d2) << '\n';
    os << "exp_theta_t " << format_double(p.exp_theta_t) << '\n';
    os << "exp_theta_r " << format_double(p.exp_theta_r) << '\n';
    os << "bounds_lower";
    for (double v : rec.bounds.lower)
        os << ' ' << format_double(v);
    os << "\nbounds_upper";
    for (double v : rec.bounds.upper)
        os << ' ' << format_double(v);
    os << "\nbounds_active";
    for (bool b : rec.fit.bounds_active)
        os << ' ' << (b ? 1 : 0);
    os << '\n';
    os << "sf_mu " << format_double(rec.fit.sf_mu) << '\n';
    os << "sf_sigma " << format_double(rec.fit.sf_sigma) << '\n';
    os << "iterations " << rec.fit.iterations << '\n';
    os << "converged " << (rec.fit.converged ? 1 : 0) << '\n';
    os << "n_points " << rec.n_points << '\n';
    os << "calibration_offset_db " << format_double(rec.calibration_offset_db) << '\n';
}

FitRecord load_fit(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.fit");

    FitRecord rec;
    ModelParams &p = rec.fit.params;
    p.mask = {false, false, false, false};

    std::vector<std::string> tok;
    while (reader.next(tok))
    {
        const std::string &key = tok[0];
        if (key == "family" && tok.size() == 2)
            p.family = model_family_from_string(tok[1]);
        else if (key == "scenario" && tok.size() == 2)
            rec.scenario = scenario_from_string(tok[1]);
        else if (key == "mask")
        {
            for (std::size_t i = 1; i < tok.size(); ++i)
            {
                if (tok[i] == "d1")
                    p.mask.d1 = true;
                else if (tok[i] == "d2")
                    p.mask.d2 = true;
                else if (tok[i] == "theta_t")
                    p.mask.theta_t = true;
                else if (tok[i] == "theta_r")
                    p.mask.theta_r = true;
                else
                    reader.fail("unknown mask variable '" + tok[i] + "'");
            }
        }
        else if (key == "reference" && tok.size() == 5)
        {
            p.reference.d0_1 = to_double(reader, tok[1]);
            p.reference.d0_2 = to_double(reader, tok[2]);
            p.reference.theta0_t = to_double(reader, tok[3]);
            p.reference.theta0_r = to_double(reader, tok[4]);
        }
        else if (key == "intercept" && tok.size() == 2)
            p.alpha_or_ref = to_double(reader, tok[1]);
        else if (key == "exp_d1" && tok.size() == 2)
            p.exp_d1 = to_double(reader, tok[1]);
        else if (key == "exp_d2" && tok.size() == 2)
            p.exp_d2 = to_double(reader, tok[1]);
        else if (key == "exp_theta_t" && tok.size() == 2)
            p.exp_theta_t = to_double(reader, tok[1]);
        else if (key == "exp_theta_r" && tok.size() == 2)
            p.exp_theta_r = to_double(reader, tok[1]);
        else if (key == "bounds_lower" && tok.size() == 6)
            for (int i = 0; i < 5; ++i)
                rec.bounds.lower[std::size_t(i)] = to_double(reader, tok[std::size_t(i) + 1]);
        else if (key == "bounds_upper" && tok.size() == 6)
            for (int i = 0; i < 5; ++i)
                rec.bounds.upper[std::size_t(i)] = to_double(reader, tok[std::size_t(i) + 1]);
        else if (key == "bounds_active" && tok.size() == 6)
            for (int i = 0; i < 5; ++i)
                rec.fit.bounds_active[std::size_t(i)] = tok[std::size_t(i) + 1] == "1";
        else if (key == "sf_mu" && tok.size() == 2)
            rec.fit.sf_mu = to_double(reader, tok[1]);
        else if (key == "sf_sigma" && tok.size() == 2)
            rec.fit.sf_sigma = to_double(reader, tok[1]);
        else if (key == "iterations" && tok.size() == 2)
            rec.fit.iterations = int(to_size(reader, tok[1]));
        else if (key == "converged" && tok.size() == 2)
            rec.fit.converged = tok[1] == "1";
        else if (key == "n_points" && tok.size() == 2)
            rec.n_points = to_size(reader, tok[1]);
        else if (key == "calibration_offset_db" && tok.size() == 2)
            rec.calibration_offset_db = to_double(reader, tok[1]);
        else
            reader.fail("unrecognized fit line starting with '" + key + "'");
    }
    return rec;
}

// ---- codebooks -----------------------------------------------------------

void save_codebook(const Codebook &cb, std::ostream &os)
{
    os << "rischan.codebook v1\n";
    os << "size " << cb.rows << ' ' << cb.cols << '\n';
    os << "target " << format_double(cb.target.d1) << ' ' << format_double(cb.target.d2) << ' '
       << format_double(cb.target.theta_t) << ' ' << format_double(cb.target.theta_r) << '\n';
    os << "threshold " << format_double(cb.threshold) << '\n';
    for (std::size_t r = 0; r < cb.rows; ++r)
    {
        os << "bits ";
        for (std::size_t c = 0; c < cb.cols; ++c)
            os << (cb.at(r, c) ? '1' : '0');
        os << '\n';
    }
}

Codebook load_codebook(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.codebook");

    Codebook cb;
    std::vector<std::string> tok;
    if (!reader.next(tok) || tok[0] != "size" || tok.size() != 3)
        reader.fail("expected 'size <rows> <cols>'");
    cb.rows = to_size(reader, tok[1]);
    cb.cols = to_size(reader, tok[2]);
    if (cb.rows == 0 || cb.cols == 0)
        reader.fail("codebook dimensions must be positive");

    if (!reader.next(tok) || tok[0] != "target" || tok.size() != 5)
        reader.fail("expected 'target <d1> <d2> <theta_t> <theta_r>'");
    cb.target = {to_double(reader, tok[1]), to_double(reader, tok[2]), to_double(reader, tok[3]),
                 to_double(reader, tok[4])};

    if (!reader.next(tok) || tok[0] != "threshold" || tok.size() != 2)
        reader.fail("expected 'threshold <radians>'");
    cb.threshold = to_double(reader, tok[1]);

    cb.bits.reserve(cb.rows * cb.cols);
    for (std::size_t r = 0; r < cb.rows; ++r)
    {
        if (!reader.next(tok) || tok[0] != "bits" || tok.size() != 2)
            reader.fail("expected 'bits <row>' for row " + std::to_string(r));
        if (tok[1].size() != cb.cols)
            reader.fail("row " + std::to_string(r) + " has " + std::to_string(tok[1].size()) +
                        " bits, expected " + std::to_string(cb.cols));
        for (char ch : tok[1])
        {
            if (ch != '0' && ch != '1')
                reader.fail("codebook bits must be 0 or 1");
            cb.bits.push_back(ch == '1' ? 1 : 0);
        }
    }
    if (reader.next(tok))
        reader.fail("trailing content after the declared rows");
    return cb;
}

// ---- plain plot exports ------------------------------------------------------

void save_pdp_text(const PowerDelayProfile &pdp, std::ostream &os)
{
    os << "# delay_ns power_db\n";
    for (std::size_t i = 0; i < pdp.powers_db.size(); ++i)
        os << format_double(pdp.delay_at(i) * 1e9) << ' ' << format_double(pdp.powers_db[i])
           << '\n';
}

void save_mpcs_text(const std::vector<Mpc> &mpcs, std::ostream &os)
{
    os << "# index delay_ns power_db\n";
    for (std::size_t i = 0; i < mpcs.size(); ++i)
        os << i << ' ' << format_double(mpcs[i].delay_s * 1e9) << ' '
           << format_double(mpcs[i].power_db) << '\n';
}

// ---- tables --------------------------------------------------------------

std::size_t Table::column_index(const std::string &name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw std::invalid_argument("table '" + title + "': no column '" + name + "'");
}

const std::string &Table::cell(std::size_t row, const std::string &column) const
{
    return rows.at(row).at(column_index(column));
}

double Table::number_at(std::size_t row, const std::string &column) const
{
    return parse_double(cell(row, column), 0);
}

void save_table(const Table &table, std::ostream &os)
{
    os << "rischan.table v1\n";
    os << "title " << (table.title.empty() ? "untitled" : table.title) << '\n';
    for (const auto &n : table.notes)
        os << "note " << n << '\n';
    os << "columns";
    for (const auto &c : table.columns)
        os << ' ' << c;
    os << '\n';
    for (const auto &row : table.rows)
    {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("table '" + table.title + "': row width mismatch");
        os << "row";
        for (const auto &cell : row)
        {
            if (cell.empty() || cell.find_first_of(" \t") != std::string::npos)
                throw std::invalid_argument("table '" + table.title +
                                            "': cells must be non-empty and whitespace-free");
            os << ' ' << cell;
        }
        os << '\n';
    }
}

Table load_table(std::istream &is)
{
    LineReader reader(is);
    expect_header(reader, "rischan.table");

    Table table;
    std::vector<std::string> tok;
    std::string raw;
    while (reader.next(tok, &raw))
    {
        const std::string &key = tok[0];
        if (key == "title")
            table.title = raw.size() > 6 ? raw.substr(6) : "";
        else if (key == "note")
            table.notes.push_back(raw.size() > 5 ? raw.substr(5) : "");
        else if (key == "columns")
            table.columns.assign(tok.begin() + 1, tok.end());
        else if (key == "row")
        {
            if (table.columns.empty())
                reader.fail("row before columns");
            if (tok.size() - 1 != table.columns.size())
                reader.fail("row has " + std::to_string(tok.size() - 1) + " cells, expected " +
                            std::to_string(table.columns.size()));
            table.rows.emplace_back(tok.begin() + 1, tok.end());
        }
        else
            reader.fail("unrecognized table line starting with '" + key + "'");
    }
    return table;
}

std::vector<Table> embed_reference_tables()
{
    std::vector<Table> tables;
    for (Scenario s : {Scenario::Outdoor, Scenario::Indoor, Scenario::O2I})
    {
        Table t;
        t.title = std::string("reference fits ") + to_string(s);
        t.notes.push_back("published fitting rows; measurement rows are environment-specific");
        t.columns = {"family", "source", "intercept", "exp_d1", "exp_d2", "exp_theta_t",
                     "exp_theta_r"};
        for (const auto &row : reference_fit_rows())
        {
            if (row.scenario != s)
                continue;
            std::vector<std::string> cells = {to_string(row.family), to_string(row.source)};
            std::size_t vi = 0;
            cells.push_back(format_double(row.values[vi++])); // intercept always present
            const bool active[4] = {row.mask.d1, row.mask.d2, row.mask.theta_t, row.mask.theta_r};
            for (bool a : active)
                cells.push_back(a ? format_double(row.values[vi++]) : "-");
            t.rows.push_back(std::move(cells));
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

// ---- path helpers -------------------------------------------------------

void write_file_atomic(const std::string &path, const std::string &contents)
{
    std::filesystem::path final_path(path);
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        os << contents;
        if (!os.flush())
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, final_path);
}

std::string read_file(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

namespace {

template <typename Loader> auto load_from(const std::string &path, Loader loader)
{
    std::istringstream is(read_file(path));
    try
    {
        return loader(is);
    }
    catch (const ParseError &e)
    {
        throw ParseError(path + ": " + e.what(), e.line, ParseError::Located{});
    }
}

template <typename T, typename Saver>
void save_as(const T &value, const std::string &path, Saver saver)
{
    std::ostringstream os;
    saver(value, os);
    write_file_atomic(path, os.str());
}

} // namespace

CampaignSpec load_campaign_file(const std::string &path)
{
    return load_from(path, [](std::istream &is) { return load_campaign(is); });
}
SweepDataset load_sweeps_file(const std::string &path)
{
    return load_from(path, [](std::istream &is) { return load_sweeps(is); });
}
CalibrationProfile load_calibration_file(const std::string &path)
{
    return load_from(path, [](std::istream &is) { return load_calibration(is); });
}
FitRecord load_fit_file(const std::string &path)
{
    return load_from(path, [](std::istream &is) { return load_fit(is); });
}
Table load_table_file(const std::string &path)
{
    return load_from(path, [](std::istream &is) { return load_table(is); });
}

void save_campaign_file(const CampaignSpec &spec, const std::string &path)
{
    save_as(spec, path, [](const CampaignSpec &v, std::ostream &os) { save_campaign(v, os); });
}
void save_sweeps_file(const SweepDataset &ds, const std::string &path)
{
    save_as(ds, path, [](const SweepDataset &v, std::ostream &os) { save_sweeps(v, os); });
}
void save_calibration_file(const CalibrationProfile &cal, const std::string &path)
{
    save_as(cal, path,
            [](const CalibrationProfile &v, std::ostream &os) { save_calibration(v, os); });
}
void save_fit_file(const FitRecord &rec, const std::string &path)
{
    save_as(rec, path, [](const FitRecord &v, std::ostream &os) { save_fit(v, os); });
}
void save_table_file(const Table &table, const std::string &path)
{
    save_as(table, path, [](const Table &v, std::ostream &os) { save_table(v, os); });
}

}
