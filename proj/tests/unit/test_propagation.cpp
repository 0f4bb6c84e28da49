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

#include "error.hpp"
#include "propagation.hpp"

#include <cmath>
#include <vector>

using namespace sondenet;

namespace {

std::vector<double> grid(double a, double b, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(a + (b - a) * (i + 0.5) / n);
    return g;
}

// A geometry where the single-piece laws' implicit assumptions hold on a non-empty
// range: sqrt(l^2 - r_max^2) >= h_min and l <= h_max for l in [11.18, 20].
NetworkParams single_piece_region_params() {
    NetworkParams p;
    p.r_max_km = 10.0;
    return p;
}

const SpatialCase kCase1 = cases::Case1{};
const SpatialCase kCase2 = cases::Case2{};

}  // namespace

TEST_CASE("closed forms match the quadrature oracle over the whole support") {
    for (const auto& p : {NetworkParams{}, single_piece_region_params()}) {
        for (const auto& c : {kCase1, kCase2}) {
            double worst_cdf = 0.0, worst_pdf = 0.0;
            for (double l : grid(p.h_min_km, p.max_slant_km(), 100)) {
                const auto cc = closed_cdf(c, l, p);
                const auto pc = closed_pdf(c, l, p);
                CHECK_FALSE(cc.used_fallback);
                CHECK_FALSE(cc.series_truncated);
                worst_cdf = std::max(worst_cdf, std::abs(cc.value - numeric_cdf(c, l, p).value));
                worst_pdf = std::max(worst_pdf, std::abs(pc.value - numeric_pdf(c, l, p).value));
            }
            CAPTURE(case_name(c));
            CHECK(worst_cdf < 1e-6);
            CHECK(worst_pdf < 1e-5);
        }
    }
}

TEST_CASE("single-piece laws inside their validity region") {
    const auto p = single_piece_region_params();
    const SeriesControl s;
    for (double l : grid(std::hypot(p.r_max_km, p.h_min_km), p.h_max_km, 100)) {
        CHECK(single_piece_pdf(true, l, p, s) == doctest::Approx(numeric_pdf(kCase1, l, p).value).epsilon(1e-9));
        CHECK(single_piece_cdf(false, l, p, s, true) ==
              doctest::Approx(numeric_cdf(kCase2, l, p).value).epsilon(1e-9));
        CHECK(single_piece_pdf(false, l, p, s) == doctest::Approx(numeric_pdf(kCase2, l, p).value).epsilon(1e-9));
        // The Case 1 CDF needs its series prefactor restored.
        CHECK(single_piece_cdf(true, l, p, s, true) ==
              doctest::Approx(numeric_cdf(kCase1, l, p).value).epsilon(1e-9));
        CHECK(std::abs(single_piece_cdf(true, l, p, s, false) - numeric_cdf(kCase1, l, p).value) > 1.0);
    }
    CHECK_THROWS_AS(single_piece_cdf(true, 9.0, p, s, true), DomainError);
}

TEST_CASE("oracle cdf: endpoints, monotonicity, mixture linearity") {
    NetworkParams p;
    const QuadratureControl ctl;
    for (const auto& c : {kCase1, kCase2, make_case3(p), make_sphere(p)}) {
        CAPTURE(case_name(c));
        const auto sup = support_of(c, p);
        CHECK(numeric_cdf(c, sup.l_max, p, ctl).value == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(numeric_cdf(c, sup.l_min, p, ctl).value == doctest::Approx(0.0));
        double prev = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double l = sup.l_min + (sup.l_max - sup.l_min) * i / 200.0;
            const double f = numeric_cdf(c, l, p, ctl).value;
            CHECK(f >= prev - 1e-12);
            prev = f;
        }
    }
    const SpatialCase mix = cases::Case3{0.3, 0.7};
    for (double l : grid(5.0, p.max_slant_km(), 25)) {
        const double want = 0.3 * numeric_cdf(kCase1, l, p, ctl).value + 0.7 * numeric_cdf(kCase2, l, p, ctl).value;
        CHECK(std::abs(numeric_cdf(mix, l, p, ctl).value - want) < 2 * ctl.abs_tol + 2 * ctl.rel_tol);
    }
}

TEST_CASE("oracle pdf is the derivative of the oracle cdf") {
    NetworkParams p;
    for (const auto& c : {kCase1, kCase2, make_sphere(p)}) {
        for (double l : grid(5.2, p.max_slant_km() - 0.2, 40)) {
            const double h = 1e-3;
            const double fd = (numeric_cdf(c, l + h, p).value - numeric_cdf(c, l - h, p).value) / (2 * h);
            const double f = numeric_pdf(c, l, p).value;
            CHECK(f >= 0.0);
            CHECK(std::abs(fd - f) < 1e-4);
        }
    }
}

TEST_CASE("closed cdf and pdf are consistent") {
    NetworkParams p;
    for (const auto& c : {kCase1, kCase2}) {
        for (double l : grid(5.2, p.max_slant_km() - 0.2, 60)) {
            const double h = 1e-4;
            const double fd = (closed_cdf(c, l + h, p).value - closed_cdf(c, l - h, p).value) / (2 * h);
            CHECK(std::abs(fd - closed_pdf(c, l, p).value) < 1e-5);
        }
    }
}

TEST_CASE("denser networks pull Case 1 mass toward the floor") {
    NetworkParams sparse, dense;
    dense.lambda_n = 1.0;
    auto median = [](const NetworkParams& p) {
        double lo = p.h_min_km, hi = p.max_slant_km();
        for (int i = 0; i < 50; ++i) {
            const double mid = 0.5 * (lo + hi);
            (numeric_cdf(kCase1, mid, p).value < 0.5 ? lo : hi) = mid;
        }
        return lo;
    };
    CHECK(median(dense) < median(sparse));
}

TEST_CASE("series truncation") {
    NetworkParams p;
    const SeriesControl base;
    SeriesControl doubled = base;
    doubled.n_terms *= 2;
    for (const auto& c : {kCase1, kCase2}) {
        for (double l : grid(5.0, p.max_slant_km(), 50)) {
            CHECK(std::abs(closed_cdf(c, l, p, base).value - closed_cdf(c, l, p, doubled).value) < 1e-12);
            CHECK(std::abs(closed_pdf(c, l, p, base).value - closed_pdf(c, l, p, doubled).value) < 1e-12);
        }
    }
    const auto cut = closed_cdf(kCase2, 24.0, p, SeriesControl{3, 1e-16});
    CHECK(cut.series_truncated);
    CHECK(cut.terms_used == 3);
    CHECK_THROWS_AS(closed_cdf(kCase1, 10.0, p, SeriesControl{0, 1e-16}), InvalidParams);
}

TEST_CASE("fallbacks and domain") {
    NetworkParams p;
    const auto s = closed_cdf(make_sphere(p), 12.0, p);
    CHECK(s.used_fallback);
    CHECK(s.value == doctest::Approx(numeric_cdf(make_sphere(p), 12.0, p).value));
    NetworkParams k2 = p;
    k2.case1_k_s = 2.0;
    CHECK(closed_pdf(kCase1, 12.0, k2).used_fallback);
    CHECK_FALSE(closed_pdf(kCase1, 12.0, p).used_fallback);
    CHECK_THROWS_AS(closed_cdf(kCase1, 4.9, p), DomainError);
    CHECK_THROWS_AS(closed_pdf(kCase2, p.max_slant_km() + 0.1, p), DomainError);
    CHECK_THROWS_AS(numeric_cdf(kCase2, 3.0, p), DomainError);
    CHECK(closed_cdf(kCase1, p.h_min_km, p).value == doctest::Approx(0.0));
    CHECK(closed_cdf(kCase2, p.max_slant_km(), p).value == doctest::Approx(1.0));
}
