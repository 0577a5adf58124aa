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

#ifndef RISCHAN_FITTING_HPP
#define RISCHAN_FITTING_HPP

#include "rischan/pl_models.hpp"
#include "rischan/reference_tables.hpp"

#include <array>
#include <utility>
#include <vector>

namespace rischan {

struct PlObservation
{
    MeasurementPoint point;
    double pl_db = 0.0;
};

// Box bounds in (intercept, exp_d1, exp_d2, exp_theta_t, exp_theta_r) order.
// An equal lower and upper bound freezes the parameter; masked slots are
// ignored.
struct FitBounds
{
    std::array<double, 5> lower{};
    std::array<double, 5> upper{};

    void validate() const; // throws std::invalid_argument
};

struct FitOptions
{
    int max_iterations = 500;
    double cost_tol = 1e-10; // relative cost decrease
    double step_tol = 1e-12; // step norm in transformed coordinates
};

struct FitResult
{
    ModelParams params;
    std::vector<double> residuals; // observed - predicted [dB]
    double sf_mu = 0.0;
    double sf_sigma = 0.0;
    std::array<bool, 5> bounds_active{};
    int iterations = 0;
    bool converged = false;
};

// Bounded nonlinear least squares on the cascaded FI/CI families
// (Levenberg-Marquardt on a logistic map of each free parameter into its
// box; start at the box midpoint). Masked parameters are removed from the
// solve; frozen parameters (equal bounds) are held exactly. Deterministic.
//
// Throws std::invalid_argument for under-determined datasets, a CI intercept
// that is not frozen, or points violating model preconditions.
FitResult fit_model(const std::vector<PlObservation> &dataset, ModelFamily family,
                    const VariableMask &mask, const FitBounds &bounds,
                    const FitOptions &options = {}, const ModelReference &reference = {});

struct ShadowFadingStats
{
    double mu = 0.0;    // [dB]
    double sigma = 0.0; // unbiased [dB]
    // (residual, empirical cdf) pairs sorted by residual, for plotting
    std::vector<std::pair<double, double>> cdf_samples;
};

ShadowFadingStats shadow_fading_stats(const std::vector<double> &residuals);

struct GoodnessReport
{
    double rmse = 0.0;
    double mean_error = 0.0;
    double max_abs_error = 0.0;
};

// Holdout errors of a fitted model. Throws std::invalid_argument on an
// empty holdout.
GoodnessReport goodness_report(const FitResult &fit, const std::vector<PlObservation> &holdout);

}

#endif
