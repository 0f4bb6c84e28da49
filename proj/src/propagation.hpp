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

namespace sondenet {

/// Truncation of the Taylor series used by the closed-form distance laws.
struct SeriesControl {
    int n_terms = 40;
    double tail_tol = 1e-16;

    void validate() const;
};

/// A closed-form distance-law evaluation and how it was obtained.
struct DistanceValue {
    double value = 0.0;
    /// The closed form was unavailable for this case or parameter set, and the
    /// quadrature oracle produced the value instead.
    bool used_fallback = false;
    /// A Taylor series hit n_terms before its terms fell below tail_tol.
    bool series_truncated = false;
    int terms_used = 0;
};

/// CDF of the slant distance L = sqrt(R^2 + H^2).
///
/// Case 1 (irregular horizontal law, exponential altitude) and Case 2
/// (disk-uniform horizontal law, truncated-Weibull altitude) are evaluated in
/// closed form: the substitution t = sqrt(l^2 - u^2) turns the inner altitude
/// integral into elementary terms plus one Taylor series. The u-range is split
/// where sqrt(l^2 - u^2) crosses h_max and h_min, so the form holds on the whole
/// support rather than only where sqrt(l^2 - r_max^2) >= h_min and l <= h_max.
/// Case 3 mixes the two. The spherical baseline and Case 1 with a non-unit
/// Weibull shape fall back to numeric_cdf and set used_fallback.
///
/// Throws DomainError for l outside [h_min, l_max].
DistanceValue closed_cdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                         const SeriesControl& series = {});

/// Density of the slant distance; same coverage and fallback rules as closed_cdf.
DistanceValue closed_pdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                         const SeriesControl& series = {});

/// Quadrature oracle: the joint (r, h) density integrated over
/// {r^2 + h^2 <= l^2} intersected with the support, altitude limits clamped.
QuadResult numeric_cdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                       const QuadratureControl& ctl = {});

/// Quadrature oracle for the density: differentiating under the integral sign
/// leaves  l * \int f(u, sqrt(l^2-u^2)) / sqrt(l^2-u^2) du  over the admissible u.
QuadResult numeric_pdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                       const QuadratureControl& ctl = {});

/// Case 1 / Case 2 laws as one expression, without the range split above
/// (u runs over [0, r_max]). Only meaningful where sqrt(l^2 - r_max^2) >= h_min
/// and l <= h_max; Case 1 requires l >= r_max.
/// `with_series_prefactor` = false drops the factor
/// (1/2) exp(-pi lambda l^2 - 1/(16 pi lambda)) from the Case 1 CDF series
/// term, a widely copied form that is wrong by orders of magnitude. Case 2
/// ignores it.
double single_piece_cdf(bool case1, double l_km, const NetworkParams& p,
                        const SeriesControl& series, bool with_series_prefactor);
double single_piece_pdf(bool case1, double l_km, const NetworkParams& p,
                        const SeriesControl& series);

}  // namespace sondenet
