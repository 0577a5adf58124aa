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

#ifndef RISCHAN_PL_MODELS_HPP
#define RISCHAN_PL_MODELS_HPP

#include "rischan/geometry.hpp"

namespace rischan {

enum class ModelFamily
{
    FiTraditional,
    CiTraditional,
    FiRis,
    CiRis
};

const char *to_string(ModelFamily f);
ModelFamily model_family_from_string(const std::string &s);

// Which variables a (reduced) cascaded model keeps. A masked-out variable
// contributes no term and its exponent must be exactly zero.
struct VariableMask
{
    bool d1 = true;
    bool d2 = true;
    bool theta_t = true;
    bool theta_r = true;

    int active_count() const { return int(d1) + int(d2) + int(theta_t) + int(theta_r); }
};

// Reference variables for the close-in form. Defaults (1 m, 1 m, 0 deg,
// 0 deg); reduced scenario models pin other references together with their
// tabulated intercept constants.
struct ModelReference
{
    double d0_1 = 1.0;
    double d0_2 = 1.0;
    double theta0_t = 0.0; // [deg]
    double theta0_r = 0.0; // [deg]
};

// Parameter vector for the traditional / cascaded FI and CI families.
// alpha_or_ref is the floating intercept for FI and the frozen free-space
// reference level for CI. Exponent slots for masked variables are zero.
struct ModelParams
{
    ModelFamily family = ModelFamily::FiRis;
    double alpha_or_ref = 0.0; // [dB]
    double exp_d1 = 0.0;       // beta1 / n1
    double exp_d2 = 0.0;       // beta2 / n2
    double exp_theta_t = 0.0;  // lambda1 / mu1
    double exp_theta_r = 0.0;  // lambda2 / mu2
    VariableMask mask;
    ModelReference reference;
};

// Deterministic mean models; the shadow factor lives in the fit residuals.
// The single-variable traditional forms read their slope from exp_d2.
double eval_fi_traditional(const ModelParams &params, double d_m);
double eval_ci_traditional(const ModelParams &params, double d_m, double d0_m = 1.0);
double eval_fi_ris(const ModelParams &params, const MeasurementPoint &point);
double eval_ci_ris(const ModelParams &params, const MeasurementPoint &point);

// Dispatches on params.family (cascaded families only).
double eval_ris_model(const ModelParams &params, const MeasurementPoint &point);

}

#endif
