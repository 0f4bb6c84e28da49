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

#include <doctest.h>

#include "channel.hpp"
#include "error.hpp"

#include <cmath>
#include <vector>

using namespace sondenet;

namespace {

double gamma_default() {
    // Independent evaluation of the rain fit at 0.4 GHz and 50 mm/h.
    const double lf = std::log10(0.4);
    const double a = 2.5292e-7 * std::pow(0.4, 5.8688 - 1.2697 * lf);
    const double b = 2.2698 - 1.2145 * lf + 0.2293 * lf * lf;
    return a * std::pow(50.0, b);
}

}  // namespace

TEST_CASE("rain coefficients") {
    const auto one = itu_coefficients(1.0);
    CHECK(one.a_coef == doctest::Approx(2.5292e-7).epsilon(1e-15));
    CHECK(one.b_coef == doctest::Approx(2.2698).epsilon(1e-15));
    const auto c = itu_coefficients(0.4);
    CHECK(std::abs(c.a_coef - 7.36e-10) / 7.36e-10 < 2e-3);
    CHECK(c.b_coef == doctest::Approx(2.789).epsilon(1e-3));
    CHECK(c.a_coef > 0.0);
    const double h = 1e-6;
    CHECK(std::abs(itu_coefficients(0.4 + h).b_coef - itu_coefficients(0.4 - h).b_coef) < 1e-5);
    CHECK_THROWS_AS(itu_coefficients(0.0), InvalidParams);
}

TEST_CASE("specific attenuation") {
    const auto c = itu_coefficients(0.4);
    CHECK(specific_attenuation(c, 0.0) == 0.0);
    CHECK(specific_attenuation(c, 50.0) == doctest::Approx(gamma_default()).epsilon(1e-13));
    double prev = 0.0;
    for (double r = 0.0; r <= 200.0; r += 5.0) {
        const double g = specific_attenuation(c, r);
        CHECK(g >= prev);
        prev = g;
    }
}

TEST_CASE("slant distance through the rain layer") {
    CHECK(slant_distance(Placement::from(0.0, 10.0), 5.0) == doctest::Approx(5.0));
    CHECK(slant_distance(Placement::from(7.0, 5.0), 5.0) == 0.0);
    CHECK(slant_distance(Placement::from(12.0, 9.0), 5.0) == doctest::Approx(4.0 * 15.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("attenuation modes") {
    NetworkParams p;
    const auto pl = Placement::from(12.0, 9.0);
    const double loss = p.r_corr * gamma_default() * 4.0 * 15.0 / 9.0;
    CHECK(rain_attenuation(pl, p, AttenuationMode::PaperLinear).factor == doctest::Approx(loss).epsilon(1e-12));
    CHECK(rain_attenuation(pl, p, AttenuationMode::DbExact).factor ==
          doctest::Approx(std::pow(10.0, loss / 10.0)).epsilon(1e-12));
    const auto floor = rain_attenuation(Placement::from(3.0, p.h_min_km), p, AttenuationMode::PaperLinear);
    CHECK(floor.factor == kPaperLinearFloor);
    CHECK(floor.floored);
    NetworkParams dry = p;
    dry.rain_rate_mm_h = 0.0;
    CHECK(rain_attenuation(pl, dry, AttenuationMode::DbExact).factor == 1.0);
}

TEST_CASE("dB-exact attenuation is at least 1 and linearises to the paper value") {
    NetworkParams p;
    for (double r = 0.0; r <= 20.0; r += 2.5) {
        for (double h = 5.0; h <= 20.0; h += 1.5) {
            CHECK(rain_attenuation(Placement::from(r, h), p, AttenuationMode::DbExact).factor >= 1.0);
        }
    }
    // Small losses: 10^(x/10) = 1 + x ln(10)/10 + O(x^2), x the linear-mode value.
    for (double rate : {10.0, 30.0, 50.0}) {
        NetworkParams q = p;
        q.rain_rate_mm_h = rate;
        const auto pl = Placement::from(12.0, 9.0);
        const double x = rain_attenuation(pl, q, AttenuationMode::PaperLinear).factor;
        REQUIRE(x < 0.1);
        const double db = rain_attenuation(pl, q, AttenuationMode::DbExact).factor;
        CHECK(std::abs(db - 1.0 - x * std::log(10.0) / 10.0) <= 0.03 * x * x);
        CHECK(10.0 * std::log10(db) == doctest::Approx(x).epsilon(1e-9));
    }
}

TEST_CASE("received power") {
    NetworkParams p;
    const auto pl = Placement::from(12.0, 9.0);
    // Hand-composed link budget.
    const double pt = std::pow(10.0, (33.0 - 30.0) / 10.0);
    const double gains = std::pow(10.0, 0.2) * std::pow(10.0, 0.2);
    const double a = gamma_default() * 4.0 * 15.0 / 9.0;
    const double want = pt * 1.0 / a * std::pow(15.0, -2.0) * gains;
    CHECK(std::abs(received_power(pl, 1.0, p, AttenuationMode::PaperLinear) - want) <= 1e-12 * want);

    // Power control off: h^0 = 1.
    NetworkParams eps = p;
    eps.epsilon = 0.5;
    CHECK(received_power(pl, 1.0, eps, AttenuationMode::PaperLinear) ==
          doctest::Approx(want * std::pow(9.0, 1.0)).epsilon(1e-12));

    // Doubling l at fixed h with no rain quarters the power.
    NetworkParams dry = p;
    dry.rain_rate_mm_h = 0.0;
    const auto near = Placement::from(0.0, 8.0);
    const auto far = Placement::from(std::sqrt(16.0 * 16.0 - 64.0), 8.0);
    CHECK(received_power(far, 1.0, dry, AttenuationMode::DbExact) ==
          doctest::Approx(received_power(near, 1.0, dry, AttenuationMode::DbExact) / 4.0).epsilon(1e-12));
}

TEST_CASE("received power is monotone in distance and power control") {
    NetworkParams p;
    for (auto mode : {AttenuationMode::PaperLinear, AttenuationMode::DbExact}) {
        for (double h : {6.0, 10.0, 18.0}) {
            double prev = INFINITY;
            for (double r = 0.0; r <= 20.0; r += 0.5) {
                const double pr = received_power(Placement::from(r, h), 1.0, p, mode);
                CHECK(pr < prev);
                prev = pr;
            }
            double last = 0.0;
            for (double e = 0.0; e <= 1.0; e += 0.1) {
                NetworkParams q = p;
                q.epsilon = e;
                const double pr = received_power(Placement::from(7.0, h), 1.0, q, mode);
                CHECK(pr > last);
                last = pr;
            }
        }
    }
}

TEST_CASE("sinr") {
    const double sigma2 = std::pow(10.0, (-104.0 - 30.0) / 10.0);
    CHECK(sigma2 == doctest::Approx(3.981e-14).epsilon(1e-4));
    NetworkParams p;
    CHECK(dbm_to_watt(p.sigma2_dbm) == doctest::Approx(sigma2).epsilon(1e-14));
    const ChannelRealization tr{1.0, 1.0, 2e-9};
    CHECK(sinr(tr, {}, sigma2) == doctest::Approx(2e-9 / sigma2).epsilon(1e-14));
    const std::vector<ChannelRealization> twin = {tr};
    CHECK(sinr(tr, twin, 1e-300) == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<ChannelRealization> many = {{1, 1, 3e-10}, {0.5, 2, 7e-11}, {2, 1, 1e-12}};
    const double base = sinr(tr, many, sigma2);
    for (double c : {1e-6, 3.0, 1e9}) {
        std::vector<ChannelRealization> scaled = many;
        for (auto& i : scaled) i.rx_power_w *= c;
        ChannelRealization t = tr;
        t.rx_power_w *= c;
        CHECK(std::abs(sinr(t, scaled, sigma2 * c) - base) <= 1e-12 * base);
    }
    CHECK_THROWS_AS(sinr(tr, many, 0.0), InvalidParams);
}

TEST_CASE("realisations carry consistent fields") {
    NetworkParams p;
    const auto pl = Placement::from(4.0, 13.0);
    const auto r = realize_channel(pl, 0.7, p, AttenuationMode::DbExact);
    CHECK(r.fading_g == 0.7);
    CHECK(r.attenuation_a >= 1.0);
    CHECK(r.rx_power_w == doctest::Approx(received_power(pl, 0.7, p, AttenuationMode::DbExact)));
    CHECK(parse_attenuation_mode(attenuation_mode_name(AttenuationMode::DbExact)) == AttenuationMode::DbExact);
    CHECK_THROWS_AS(parse_attenuation_mode("loud"), InvalidParams);
}
