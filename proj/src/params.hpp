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

#include <cmath>
#include <string>
#include <variant>

namespace sondenet {

/// Scalar model parameters. Units follow the field suffixes; powers and gains
/// are stored in dB(m) and converted to linear Watts where they are consumed.
struct NetworkParams {
    double lambda_n = 0.01;   // nodes per km^3
    double alpha = 2.0;       // path-loss exponent
    double epsilon = 0.0;     // power-control factor, [0,1]
    double mu = 1.0;          // Rayleigh fading rate (mean gain 1/mu)
    double p_t_dbm = 33.0;
    double g_t_db = 2.0;
    double g_r_db = 2.0;
    double sigma2_dbm = -104.0;  // -174 dBm/Hz over 10 MHz
    double f_ghz = 0.4;
    double rain_rate_mm_h = 50.0;
    double r_corr = 1.0;      // distance correction factor of the rain path
    double r_max_km = 20.0;
    double h_min_km = 5.0;
    double h_max_km = 20.0;
    // Truncated-Weibull altitude laws. Case 1 uses (1, 2), i.e. exponential
    // with mean 2 km; Case 2 uses (6, 15).
    double case1_k_s = 1.0;
    double case1_lambda_s = 2.0;
    double case2_k_s = 6.0;
    double case2_lambda_s = 15.0;
    double p1 = 0.5;
    double p2 = 0.5;

    /// Throws InvalidParams naming the first violated invariant.
    void validate() const;

    double max_slant_km() const { return std::hypot(r_max_km, h_max_km); }

    bool operator==(const NetworkParams&) const = default;
};

double dbm_to_watt(double dbm);
double db_to_linear(double db);

namespace cases {

struct Case1 {};
struct Case2 {};
struct Case3 {
    double p1 = 0.5;
    double p2 = 0.5;
};
/// Nodes uniform in the lower hemisphere of the given radius centred on the
/// receiver, truncated to altitudes >= h_min.
struct SphericalBaseline {
    double radius_km = 0.0;
};

}  // namespace cases

using SpatialCase =
    std::variant<cases::Case1, cases::Case2, cases::Case3, cases::SphericalBaseline>;

/// Case 3 with the mixture weights taken from params.
SpatialCase make_case3(const NetworkParams& p);
/// Baseline with radius sqrt(r_max^2 + h_max^2) when radius_km <= 0.
SpatialCase make_sphere(const NetworkParams& p, double radius_km = 0.0);

/// Throws InvalidParams if the case carries bad weights or radius.
void validate_case(const SpatialCase& c, const NetworkParams& p);

/// "case1", "case2", "case3", "sphere".
std::string case_name(const SpatialCase& c);

/// Parses the names produced by case_name (plus "1".."3").
SpatialCase parse_case(const std::string& name, const NetworkParams& p,
                       double sphere_radius_km = 0.0);

/// One radiosonde relative to the receiver at the origin.
struct Placement {
    double r_km = 0.0;
    double h_km = 0.0;
    double l_km = 0.0;
    double sin_theta = 1.0;

    static Placement from(double r_km, double h_km) {
        const double l = std::hypot(r_km, h_km);
        return {r_km, h_km, l, h_km / l};
    }
};

/// Support of the joint (r, h) law of a case.
struct Support {
    double r_max;
    double h_min;
    double h_max;
    double l_min;
    double l_max;
};

Support support_of(const SpatialCase& c, const NetworkParams& p);

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace sondenet
