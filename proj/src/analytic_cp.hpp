// Copyright 2026 The sondenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "params.hpp"
#include "quadrature.hpp"

#include <span>
#include <string>
#include <vector>

namespace sondenet {

enum class CpMethod { Analytic, UpperBound, MonteCarlo };

const char* cp_method_name(CpMethod m);
/// "analytic", "upper_bound", "monte_carlo". Throws InvalidParams otherwise.
CpMethod parse_cp_method(const std::string& name);

struct CpResult {
    double cp = 0.0;
    CpMethod method = CpMethod::Analytic;
    /// Quadrature error estimate of the outermost integral, or the 95% CI
    /// half-width for Monte Carlo.
    double error_estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    long long n_trials = 0;
    /// Free-form notes on fallbacks and clamps taken during evaluation.
    std::vector<std::string> notes;
};

/// Tolerances suited to the nested CP integrals (each nesting level tightens
/// by 10x, four levels deep).
QuadratureControl cp_default_control();

/// sigma'^2 = sigma^2 r_corr gamma_R / (P_t g_t g_r): the noise power in the
/// attenuation-normalised units of the coverage integrand.
double normalized_noise(const NetworkParams& p);

/// Laplace transform of the normalised aggregate interference seen by a
/// target at slant distance l_tr, interferers restricted to [l_tr, l_max].
/// Case 3 uses the mixed altitude marginal. s >= 0.
double laplace_interference(double s, double l_tr_km, const SpatialCase& c,
                            const NetworkParams& p,
                            const QuadratureControl& ctl = cp_default_control());

/// Coverage probability with noise and interference. Case 3 is evaluated as
/// p1 * CP(Case 1) + p2 * CP(Case 2). Throws DomainError when the threshold
/// is not a positive finite linear value, ConvergenceError on quadrature
/// failure.
CpResult cp_exact(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                  const QuadratureControl& ctl = cp_default_control());

/// cp_exact with the noise term removed.
CpResult cp_upper_bound(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                        const QuadratureControl& ctl = cp_default_control());

/// cp_exact or cp_upper_bound over a threshold grid, sharing the per-case
/// setup across thresholds.
std::vector<CpResult> cp_curve(const SpatialCase& c, const NetworkParams& p,
                               std::span<const double> ts_db, CpMethod method,
                               const QuadratureControl& ctl = cp_default_control());

/// cp_exact with the interference term removed: the probability that the
/// target alone clears the threshold over noise.
CpResult cp_noise_only(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                       const QuadratureControl& ctl = cp_default_control());

namespace detail {

/// cp_exact evaluating every interferer-share integral by nested quadrature
/// instead of the interpolation table. Slow; used to check the table.
CpResult cp_exact_direct(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                         const QuadratureControl& ctl = cp_default_control());

}  // namespace detail

}  // namespace sondenet
