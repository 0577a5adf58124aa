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

#include "rischan/pl_models.hpp"

#include <cmath>
#include <stdexcept>

namespace rischan {

namespace {

constexpr double pi = 3.14159265358979323846;

double cos_deg_checked(double angle_deg, const char *name)
{
    // range check, not a sign check: cos(90 deg) rounds to 6e-17 in binary64
    if (!(angle_deg > -90.0 && angle_deg < 90.0))
        throw std::domain_error(std::string("pl_models: cos(") + name + ") must be positive");
    return std::cos(angle_deg * pi / 180.0);
}

double log_distance_checked(double d, const char *name)
{
    if (!(d > 0.0))
        throw std::domain_error(std::string("pl_models: ") + name + " must be > 0");
    return std::log10(d);
}

} // namespace

const char *to_string(ModelFamily f)
{
    switch (f)
    {
    case ModelFamily::FiTraditional:
        return "fi_traditional";
    case ModelFamily::CiTraditional:
        return "ci_traditional";
    case ModelFamily::FiRis:
        return "fi_ris";
    case ModelFamily::CiRis:
        return "ci_ris";
    }
    return "?";
}

ModelFamily model_family_from_string(const std::string &s)
{
    if (s == "fi_traditional")
        return ModelFamily::FiTraditional;
    if (s == "ci_traditional")
        return ModelFamily::CiTraditional;
    if (s == "fi_ris" || s == "fi")
        return ModelFamily::FiRis;
    if (s == "ci_ris" || s == "ci")
        return ModelFamily::CiRis;
    throw std::invalid_argument("unknown model family '" + s + "'");
}

double eval_fi_traditional(const ModelParams &params, double d_m)
{
    return params.alpha_or_ref + 10.0 * params.exp_d2 * log_distance_checked(d_m, "d");
}

double eval_ci_traditional(const ModelParams &params, double d_m, double d0_m)
{
    if (!(d0_m > 0.0))
        throw std::domain_error("pl_models: reference distance must be > 0");
    return params.alpha_or_ref +
           10.0 * params.exp_d2 * (log_distance_checked(d_m, "d") - std::log10(d0_m));
}

double eval_fi_ris(const ModelParams &params, const MeasurementPoint &point)
{
    double pl = params.alpha_or_ref;
    if (params.mask.d1)
        pl += 10.0 * params.exp_d1 * log_distance_checked(point.d1, "d1");
    if (params.mask.d2)
        pl += 10.0 * params.exp_d2 * log_distance_checked(point.d2, "d2");
    if (params.mask.theta_t)
        pl -= 10.0 * params.exp_theta_t * std::log10(cos_deg_checked(point.eaoa_t, "theta_t"));
    if (params.mask.theta_r)
        pl -= 10.0 * params.exp_theta_r * std::log10(cos_deg_checked(point.eaod_r, "theta_r"));
    return pl;
}

double eval_ci_ris(const ModelParams &params, const MeasurementPoint &point)
{
    const ModelReference &ref = params.reference;
    double pl = params.alpha_or_ref;
    if (params.mask.d1)
        pl += 10.0 * params.exp_d1 *
              (log_distance_checked(point.d1, "d1") - log_distance_checked(ref.d0_1, "d0_1"));
    if (params.mask.d2)
        pl += 10.0 * params.exp_d2 *
              (log_distance_checked(point.d2, "d2") - log_distance_checked(ref.d0_2, "d0_2"));
    if (params.mask.theta_t)
        pl -= 10.0 * params.exp_theta_t *
              (std::log10(cos_deg_checked(point.eaoa_t, "theta_t")) -
               std::log10(cos_deg_checked(ref.theta0_t, "theta0_t")));
    if (params.mask.theta_r)
        pl -= 10.0 * params.exp_theta_r *
              (std::log10(cos_deg_checked(point.eaod_r, "theta_r")) -
               std::log10(cos_deg_checked(ref.theta0_r, "theta0_r")));
    return pl;
}

double eval_ris_model(const ModelParams &params, const MeasurementPoint &point)
{
    switch (params.family)
    {
    case ModelFamily::FiRis:
        return eval_fi_ris(params, point);
    case ModelFamily::CiRis:
        return eval_ci_ris(params, point);
    default:
        throw std::invalid_argument("eval_ris_model: cascaded families only");
    }
}

}
