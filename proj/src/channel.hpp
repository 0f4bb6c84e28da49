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

#include <span>
#include <string>

namespace sondenet {

struct ItuCoefficients {
    double a_coef;
    double b_coef;
};

/// Frequency-dependent rain coefficients (base-10 logs). f_ghz > 0.
ItuCoefficients itu_coefficients(double f_ghz);

/// gamma_R = a * rain_rate^b, in dB/km.
double specific_attenuation(const ItuCoefficients& c, double rain_rate_mm_h);

/// Path length through the rain layer above h_min: (h - h_min) / sin(theta).
double slant_distance(const Placement& pl, double h_min_km);

enum class AttenuationMode {
    /// r_corr * gamma_R * d_s taken as a linear divisor of power.
    PaperLinear,
    /// The same quantity read as dB: 10^(r_corr * gamma_R * d_s / 10).
    DbExact,
};

inline constexpr double kPaperLinearFloor = 1e-6;

struct Attenuation {
    double factor;
    /// PaperLinear value was below the floor and got raised to it.
    bool floored;
};

Attenuation rain_attenuation(const Placement& pl, const NetworkParams& p, AttenuationMode mode);

/// P_t g A^-1 l^-alpha h^(alpha epsilon) g_t g_r, in Watts.
double received_power(const Placement& pl, double fading_g, const NetworkParams& p,
                      AttenuationMode mode);

struct ChannelRealization {
    double fading_g = 0.0;
    double attenuation_a = 1.0;
    double rx_power_w = 0.0;
};

ChannelRealization realize_channel(const Placement& pl, double fading_g, const NetworkParams& p,
                                   AttenuationMode mode);

/// realize_channel with the rain and link-budget constants computed once;
/// for loops over many links under one parameter set.
class LinkModel {
public:
    LinkModel(const NetworkParams& p, AttenuationMode mode);
    ChannelRealization realize(const Placement& pl, double fading_g) const;
    AttenuationMode mode() const { return mode_; }

private:
    AttenuationMode mode_;
    double loss_per_km_;  // r_corr * gamma_R
    double gains_w_;
    double h_min_, alpha_, power_exp_;
};

/// sigma2_w > 0.
double sinr(const ChannelRealization& tr, std::span<const ChannelRealization> interferers,
            double sigma2_w);

const char* attenuation_mode_name(AttenuationMode m);
/// "paper-linear" / "db-exact". Throws InvalidParams otherwise.
AttenuationMode parse_attenuation_mode(const std::string& name);

}  // namespace sondenet
