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

#include "rischan/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr int n_slots = 5; // intercept + four exponents

double sigmoid(double t)
{
    if (t > 40.0)
        return 1.0;
    if (t < -40.0)
        return 0.0;
    return 1.0 / (1.0 + std::exp(-t));
}

// Per-point regressors; the model is linear in its parameters, the
// nonlinearity lives entirely in the box transform.
struct DesignRow
{
    std::array<double, n_slots> x{};
};

DesignRow design_row(const MeasurementPoint &p, ModelFamily family, const VariableMask &mask,
                     const ModelReference &ref)
{
    auto log_cos = [](double deg, const char *name) {
        double c = std::cos(deg * pi / 180.0);
        if (!(c > 0.0))
            throw std::invalid_argument(std::string("fit_model: dataset point violates cos(") +
                                        name + ") > 0");
        return std::log10(c);
    };
    auto log_d = [](double d, const char *name) {
        if (!(d > 0.0))
            throw std::invalid_argument(std::string("fit_model: dataset point violates ") + name +
                                        " > 0");
        return std::log10(d);
    };

    bool ci = family == ModelFamily::CiRis;
    DesignRow row;
    row.x[0] = 1.0;
    if (mask.d1)
        row.x[1] = 10.0 * (log_d(p.d1, "d1") - (ci ? log_d(ref.d0_1, "d0_1") : 0.0));
    if (mask.d2)
        row.x[2] = 10.0 * (log_d(p.d2, "d2") - (ci ? log_d(ref.d0_2, "d0_2") : 0.0));
    if (mask.theta_t)
        row.x[3] = -10.0 * (log_cos(p.eaoa_t, "theta_t") -
                            (ci ? log_cos(ref.theta0_t, "theta0_t") : 0.0));
    if (mask.theta_r)
        row.x[4] = -10.0 * (log_cos(p.eaod_r, "theta_r") -
                            (ci ? log_cos(ref.theta0_r, "theta0_r") : 0.0));
    return row;
}

// Gaussian elimination with partial pivoting; m <= 5.
bool solve_dense(std::vector<double> &a, std::vector<double> &b, int m)
{
    for (int col = 0; col < m; ++col)
    {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col]))
                piv = r;
        if (std::abs(a[piv * m + col]) < 1e-300)
            return false;
        if (piv != col)
        {
            for (int c = 0; c < m; ++c)
                std::swap(a[col * m + c], a[piv * m + c]);
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < m; ++r)
        {
            double f = a[r * m + col] / a[col * m + col];
            for (int c = col; c < m; ++c)
                a[r * m + c] -= f * a[col * m + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = m - 1; r >= 0; --r)
    {
        double acc = b[r];
        for (int c = r + 1; c < m; ++c)
            acc -= a[r * m + c] * b[c];
        b[r] = acc / a[r * m + r];
    }
    return true;
}

} // namespace

void FitBounds::validate() const
{
    for (int i = 0; i < n_slots; ++i)
        if (lower[i] > upper[i])
            throw std::invalid_argument("fit bounds: lower must be <= upper elementwise");
}

FitResult fit_model(const std::vector<PlObservation> &dataset, ModelFamily family,
                    const VariableMask &mask, const FitBounds &bounds, const FitOptions &options,
                    const ModelReference &reference)
{
    if (family != ModelFamily::FiRis && family != ModelFamily::CiRis)
        throw std::invalid_argument("fit_model: cascaded families only; reductions go through the "
                                    "variable mask");
    bounds.validate();
    if (family == ModelFamily::CiRis && bounds.lower[0] != bounds.upper[0])
        throw std::invalid_argument("fit_model: close-in intercept must be frozen "
                                    "(equal lower and upper bound)");

    std::array<bool, n_slots> in_model{};
    in_model[0] = true;
    in_model[1] = mask.d1;
    in_model[2] = mask.d2;
    in_model[3] = mask.theta_t;
    in_model[4] = mask.theta_r;

    // free = in the model and not frozen by equal bounds
    std::vector<int> free_idx;
    for (int i = 0; i < n_slots; ++i)
        if (in_model[i] && bounds.lower[i] < bounds.upper[i])
            free_idx.push_back(i);
    const int m = int(free_idx.size());

    if (dataset.size() < std::size_t(std::max(m, 1)))
        throw std::invalid_argument("fit_model: under-determined dataset, need at least " +
                                    std::to_string(std::max(m, 1)) + " points");

    const std::size_t n = dataset.size();
    std::vector<DesignRow> rows;
    rows.reserve(n);
    for (const auto &obs : dataset)
        rows.push_back(design_row(obs.point, family, mask, reference));

    std::array<double, n_slots> p{};
    for (int i = 0; i < n_slots; ++i)
        if (in_model[i])
            p[i] = bounds.lower[i]; // frozen value; free slots overwritten below

    std::vector<double> t(m, 0.0); // box midpoints
    auto apply_transform = [&](const std::vector<double> &tv) {
        for (int j = 0; j < m; ++j)
        {
            int i = free_idx[j];
            p[i] = bounds.lower[i] + (bounds.upper[i] - bounds.lower[i]) * sigmoid(tv[j]);
        }
    };

    std::vector<double> resid(n);
    auto compute_cost = [&](const std::vector<double> &tv) {
        apply_transform(tv);
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double pred = 0.0;
            for (int s = 0; s < n_slots; ++s)
                if (in_model[s])
                    pred += p[s] * rows[i].x[s];
            resid[i] = dataset[i].pl_db - pred;
            cost += resid[i] * resid[i];
        }
        return cost;
    };

    double cost = compute_cost(t);
    double lambda = 1e-3;
    bool converged = m == 0; // nothing to solve when every parameter is pinned
    int iterations = 0;

    std::vector<double> jac(n * std::max(m, 1));
    std::vector<double> trial(m);

    while (!converged && iterations < options.max_iterations)
    {
        ++iterations;

        // J_ij = d resid_i / d t_j = -x_ij * dp/dt
        apply_transform(t);
        for (int j = 0; j < m; ++j)
        {
            int idx = free_idx[j];
            double s = sigmoid(t[j]);
            double dpdt = (bounds.upper[idx] - bounds.lower[idx]) * s * (1.0 - s);
            for (std::size_t i = 0; i < n; ++i)
                jac[i * m + j] = -rows[i].x[idx] * dpdt;
        }
        compute_cost(t); // refresh residuals at the current point

        std::vector<double> jtj(m * m, 0.0), jtr(m, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (int a = 0; a < m; ++a)
            {
                jtr[a] += jac[i * m + a] * resid[i];
                for (int b = a; b < m; ++b)
                    jtj[a * m + b] += jac[i * m + a] * jac[i * m + b];
            }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < a; ++b)
                jtj[a * m + b] = jtj[b * m + a];

        bool accepted = false;
        while (!accepted && lambda < 1e14)
        {
            std::vector<double> aug = jtj;
            std::vector<double> rhs(m);
            for (int a = 0; a < m; ++a)
            {
                aug[a * m + a] += lambda * std::max(jtj[a * m + a], 1e-12);
                rhs[a] = -jtr[a];
            }
            if (!solve_dense(aug, rhs, m))
            {
                lambda *= 10.0;
                continue;
            }
            double step_norm = 0.0;
            for (int j = 0; j < m; ++j)
            {
                trial[j] = t[j] + rhs[j];
                step_norm += rhs[j] * rhs[j];
            }
            step_norm = std::sqrt(step_norm);

            double trial_cost = compute_cost(trial);
            if (trial_cost <= cost)
            {
                double decrease = cost - trial_cost;
                t = trial;
                accepted = true;
                lambda = std::max(lambda * 0.1, 1e-12);
                if (decrease <= options.cost_tol * std::max(cost, 1e-30) ||
                    step_norm <= options.step_tol || trial_cost <= 1e-24)
                    converged = true;
                cost = trial_cost;
            }
            else
            {
                lambda *= 10.0;
            }
        }
        if (!accepted)
            break; // damping exhausted; treat as stalled
    }

    compute_cost(t);

    FitResult result;
    result.iterations = iterations;
    result.converged = converged;
    result.residuals = resid;

    result.params.family = family;
    result.params.mask = mask;
    result.params.reference = reference;
    result.params.alpha_or_ref = p[0];
    result.params.exp_d1 = in_model[1] ? p[1] : 0.0;
    result.params.exp_d2 = in_model[2] ? p[2] : 0.0;
    result.params.exp_theta_t = in_model[3] ? p[3] : 0.0;
    result.params.exp_theta_r = in_model[4] ? p[4] : 0.0;

    for (int i = 0; i < n_slots; ++i)
    {
        if (!in_model[i])
            continue;
        if (bounds.lower[i] == bounds.upper[i])
        {
            result.bounds_active[i] = true;
            continue;
        }
        double span = bounds.upper[i] - bounds.lower[i];
        result.bounds_active[i] = (p[i] - bounds.lower[i] <= 1e-6 * span) ||
                                  (bounds.upper[i] - p[i] <= 1e-6 * span);
    }

    auto stats = shadow_fading_stats(result.residuals);
    result.sf_mu = stats.mu;
    result.sf_sigma = stats.sigma;
    return result;
}

ShadowFadingStats shadow_fading_stats(const std::vector<double> &residuals)
{
    ShadowFadingStats stats;
    if (residuals.empty())
        return stats;

    double sum = 0.0;
    for (double r : residuals)
        sum += r;
    stats.mu = sum / double(residuals.size());

    if (residuals.size() >= 2)
    {
        double ss = 0.0;
        for (double r : residuals)
            ss += (r - stats.mu) * (r - stats.mu);
        stats.sigma = std::sqrt(ss / double(residuals.size() - 1));
    }

    std::vector<double> sorted = residuals;
    std::sort(sorted.begin(), sorted.end());
    stats.cdf_samples.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        stats.cdf_samples.emplace_back(sorted[i], double(i + 1) / double(sorted.size()));
    return stats;
}

GoodnessReport goodness_report(const FitResult &fit, const std::vector<PlObservation> &holdout)
{
    if (holdout.empty())
        throw std::invalid_argument("goodness_report: empty holdout");

    GoodnessReport rep;
    double se = 0.0, sum = 0.0;
    for (const auto &obs : holdout)
    {
        double err = obs.pl_db - eval_ris_model(fit.params, obs.point);
        se += err * err;
        sum += err;
        rep.max_abs_error = std::max(rep.max_abs_error, std::abs(err));
    }
    rep.rmse = std::sqrt(se / double(holdout.size()));
    rep.mean_error = sum / double(holdout.size());
    return rep;
}

}
