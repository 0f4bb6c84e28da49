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

#include "channel.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>

namespace sondenet {

ItuCoefficients itu_coefficients(double f_ghz) {
    if (!(f_ghz > 0.0)) throw InvalidParams("carrier frequency must be > 0 GHz");
    const double lf = std::log10(f_ghz);
    return {2.5292e-7 * std::pow(f_ghz, 5.8688 - 1.2697 * lf), 2.2698 - 1.2145 * lf + 0.2293 * lf * lf};
}

double specific_attenuation(const ItuCoefficients& c, double rain_rate_mm_h) {
    if (!(rain_rate_mm_h >= 0.0)) throw InvalidParams("rain rate must be >= 0");
    if (rain_rate_mm_h == 0.0) return 0.0;
    return c.a_coef * std::pow(rain_rate_mm_h, c.b_coef);
}

double slant_distance(const Placement& pl, double h_min_km) {
    return (pl.h_km - h_min_km) * pl.l_km / pl.h_km;
}

Attenuation rain_attenuation(const Placement& pl, const NetworkParams& p, AttenuationMode mode) {
    const double gamma = specific_attenuation(itu_coefficients(p.f_ghz), p.rain_rate_mm_h);
    const double loss = p.r_corr * gamma * slant_distance(pl, p.h_min_km);
    if (mode == AttenuationMode::DbExact) return {std::pow(10.0, loss / 10.0), false};
    if (loss < kPaperLinearFloor) return {kPaperLinearFloor, true};
    return {loss, false};
}

double received_power(const Placement& pl, double fading_g, const NetworkParams& p,
                      AttenuationMode mode) {
    return LinkModel(p, mode).realize(pl, fading_g).rx_power_w;
}

ChannelRealization realize_channel(const Placement& pl, double fading_g, const NetworkParams& p,
                                   AttenuationMode mode) {
    return LinkModel(p, mode).realize(pl, fading_g);
}

LinkModel::LinkModel(const NetworkParams& p, AttenuationMode mode)
    : mode_(mode),
      loss_per_km_(p.r_corr * specific_attenuation(itu_coefficients(p.f_ghz), p.rain_rate_mm_h)),
      gains_w_(dbm_to_watt(p.p_t_dbm) * db_to_linear(p.g_t_db) * db_to_linear(p.g_r_db)),
      h_min_(p.h_min_km),
      alpha_(p.alpha),
      power_exp_(p.alpha * p.epsilon) {}

ChannelRealization LinkModel::realize(const Placement& pl, double fading_g) const {
    const double loss = loss_per_km_ * slant_distance(pl, h_min_);
    double a = 0.0;
    if (mode_ == AttenuationMode::DbExact) a = std::pow(10.0, loss / 10.0);
    else a = std::max(loss, kPaperLinearFloor);
    const double pr = gains_w_ * fading_g / a * std::pow(pl.l_km, -alpha_) *
                      (power_exp_ == 0.0 ? 1.0 : std::pow(pl.h_km, power_exp_));
    return {fading_g, a, pr};
}

double sinr(const ChannelRealization& tr, std::span<const ChannelRealization> interferers,
            double sigma2_w) {
    if (!(sigma2_w > 0.0)) throw InvalidParams("noise power must be > 0");
    double interference = 0.0;
    for (const auto& i : interferers) interference += i.rx_power_w;
    return tr.rx_power_w / (sigma2_w + interference);
}

const char* attenuation_mode_name(AttenuationMode m) {
    return m == AttenuationMode::PaperLinear ? "paper-linear" : "db-exact";
}

AttenuationMode parse_attenuation_mode(const std::string& name) {
    if (name == "paper-linear" || name == "linear") return AttenuationMode::PaperLinear;
    if (name == "db-exact" || name == "db") return AttenuationMode::DbExact;
    throw InvalidParams("unknown attenuation mode '" + name + "' (paper-linear, db-exact)");
}

}  // namespace sondenet
