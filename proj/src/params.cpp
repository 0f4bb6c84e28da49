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

#include "params.hpp"

#include "error.hpp"

#include <cmath>

namespace sondenet {

namespace {

constexpr double kWeightTol = 1e-12;

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidParams(msg);
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw InvalidParams(std::string(name) + " must be finite");
}

}  // namespace

void NetworkParams::validate() const {
    for (auto [v, name] : {std::pair{lambda_n, "lambda_n"}, {alpha, "alpha"},
                           {epsilon, "epsilon"}, {mu, "mu"}, {p_t_dbm, "p_t_dbm"},
                           {g_t_db, "g_t_db"}, {g_r_db, "g_r_db"}, {sigma2_dbm, "sigma2_dbm"},
                           {f_ghz, "f_ghz"}, {rain_rate_mm_h, "rain_rate_mm_h"},
                           {r_corr, "r_corr"}, {r_max_km, "r_max_km"}, {h_min_km, "h_min_km"},
                           {h_max_km, "h_max_km"}, {case1_k_s, "case1_k_s"},
                           {case1_lambda_s, "case1_lambda_s"}, {case2_k_s, "case2_k_s"},
                           {case2_lambda_s, "case2_lambda_s"}, {p1, "p1"}, {p2, "p2"}}) {
        require_finite(v, name);
    }
    require(h_min_km > 0.0, "h_min_km must be > 0");
    require(h_min_km < h_max_km, "h_min_km must be < h_max_km");
    require(r_max_km > 0.0, "r_max_km must be > 0");
    require(lambda_n >= 0.0, "lambda_n must be >= 0");
    require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0,1]");
    require(mu > 0.0, "mu must be > 0");
    require(alpha > 0.0, "alpha must be > 0");
    require(f_ghz > 0.0, "f_ghz must be > 0");
    require(rain_rate_mm_h >= 0.0, "rain_rate_mm_h must be >= 0");
    require(r_corr > 0.0, "r_corr must be > 0");
    require(case1_k_s > 0.0 && case1_lambda_s > 0.0, "case1 Weibull parameters must be > 0");
    require(case2_k_s > 0.0 && case2_lambda_s > 0.0, "case2 Weibull parameters must be > 0");
    require(p1 >= 0.0 && p2 >= 0.0, "p1 and p2 must be >= 0");
    require(std::abs(p1 + p2 - 1.0) <= kWeightTol, "p1 + p2 must equal 1");
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

SpatialCase make_case3(const NetworkParams& p) { return cases::Case3{p.p1, p.p2}; }

SpatialCase make_sphere(const NetworkParams& p, double radius_km) {
    return cases::SphericalBaseline{radius_km > 0.0 ? radius_km : p.max_slant_km()};
}

void validate_case(const SpatialCase& c, const NetworkParams& p) {
    std::visit(overloaded{
                   [](const cases::Case1&) {},
                   [](const cases::Case2&) {},
                   [](const cases::Case3& m) {
                       require(m.p1 >= 0.0 && m.p2 >= 0.0, "case3 weights must be >= 0");
                       require(std::abs(m.p1 + m.p2 - 1.0) <= kWeightTol,
                               "case3 weights must sum to 1");
                   },
                   [&](const cases::SphericalBaseline& s) {
                       require(s.radius_km > p.h_min_km,
                               "sphere radius must exceed h_min_km");
                   },
               },
               c);
}

std::string case_name(const SpatialCase& c) {
    return std::visit(overloaded{
                          [](const cases::Case1&) { return std::string("case1"); },
                          [](const cases::Case2&) { return std::string("case2"); },
                          [](const cases::Case3&) { return std::string("case3"); },
                          [](const cases::SphericalBaseline&) { return std::string("sphere"); },
                      },
                      c);
}

SpatialCase parse_case(const std::string& name, const NetworkParams& p,
                       double sphere_radius_km) {
    if (name == "case1" || name == "1") return cases::Case1{};
    if (name == "case2" || name == "2") return cases::Case2{};
    if (name == "case3" || name == "3") return make_case3(p);
    if (name == "sphere" || name == "spherical") return make_sphere(p, sphere_radius_km);
    throw InvalidParams("unknown case '" + name + "' (expected case1, case2, case3 or sphere)");
}

Support support_of(const SpatialCase& c, const NetworkParams& p) {
    if (const auto* s = std::get_if<cases::SphericalBaseline>(&c)) {
        return {s->radius_km, p.h_min_km, s->radius_km, p.h_min_km, s->radius_km};
    }
    return {p.r_max_km, p.h_min_km, p.h_max_km, p.h_min_km, p.max_slant_km()};
}

}  // namespace sondenet
