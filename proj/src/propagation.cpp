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

#include "propagation.hpp"

#include "distributions.hpp"
#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sondenet {

namespace {

using std::numbers::pi;

// Admissible horizontal radii for slant distance l: on [0, u_a] the altitude
// bound h_max is already exceeded (whole altitude band counts), on [u_a, u_b]
// the altitude t = sqrt(l^2 - u^2) sweeps [t_lo, t_hi] inside the band.
struct RadialSplit {
    double u_a, u_b, t_lo, t_hi;
};

RadialSplit split_for(double l, double r_max, double h_min, double h_max) {
    auto radius_at = [&](double h) { return std::clamp(std::sqrt(std::max(0.0, l * l - h * h)), 0.0, r_max); };
    RadialSplit s{};
    s.u_a = radius_at(h_max);
    s.u_b = radius_at(h_min);
    s.t_hi = std::sqrt(std::max(0.0, l * l - s.u_a * s.u_a));
    s.t_lo = std::sqrt(std::max(0.0, l * l - s.u_b * s.u_b));
    return s;
}

struct SeriesSum {
    long double value = 0.0L;
    int terms = 0;
    bool truncated = false;
};

void merge(SeriesSum& acc, const SeriesSum& s, long double sign) {
    acc.value += sign * s.value;
    acc.terms = std::max(acc.terms, s.terms);
    acc.truncated = acc.truncated || s.truncated;
}

// exp(log_scale) * \int_0^w exp(a x^2) dx as sum_n a^n w^(2n+1) / (n! (2n+1)).
// The scale is folded into the first term so the partial sums stay O(1).
SeriesSum gaussian_growth_series(long double a, long double w, long double log_scale,
                                 const SeriesControl& ctl) {
    SeriesSum out;
    long double term = std::exp(log_scale) * w;
    const long double aw2 = a * w * w;
    for (int n = 0;; ++n) {
        out.value += term;
        out.terms = n + 1;
        const bool past_peak = static_cast<long double>(n) >= aw2;
        if (past_peak && std::abs(term) < ctl.tail_tol) break;
        if (out.terms >= ctl.n_terms) {
            out.truncated = true;
            break;
        }
        term *= aw2 / (n + 1) * (2.0L * n + 1.0L) / (2.0L * n + 3.0L);
    }
    return out;
}

// \int_0^w exp(-(x / s^2)^(k/2)) dx as sum_n (-1)^n z^n w / (n! (n k/2 + 1)),
// z = (w / s^2)^(k/2).
SeriesSum stretched_decay_series(long double k, long double s, long double w,
                                 const SeriesControl& ctl) {
    SeriesSum out;
    const long double z = std::pow(w / (s * s), k / 2.0L);
    long double power = w;  // (-z)^n w / n!
    for (int n = 0;; ++n) {
        const long double term = power / (n * k / 2.0L + 1.0L);
        out.value += term;
        out.terms = n + 1;
        if (static_cast<long double>(n) >= z && std::abs(term) < ctl.tail_tol) break;
        if (out.terms >= ctl.n_terms) {
            out.truncated = true;
            break;
        }
        power *= -z / (n + 1);
    }
    return out;
}

struct Case1Consts {
    long double a;     // pi * lambda_n
    long double beta;  // altitude rate 1 / lambda_s
    long double kappa; // completing-the-square shift beta / (2a)
    long double horiz_norm;
    long double alt_norm;
    long double m, big_m, r_max;
};

Case1Consts case1_consts(const NetworkParams& p) {
    if (!(p.lambda_n > 0.0)) throw DomainError("Case 1 distance law is degenerate for lambda_n = 0");
    Case1Consts c{};
    c.a = pi * p.lambda_n;
    c.beta = 1.0L / p.case1_lambda_s;
    c.kappa = c.beta / (2.0L * c.a);
    c.horiz_norm = -std::expm1(-c.a * p.r_max_km * p.r_max_km);
    c.m = p.h_min_km;
    c.big_m = p.h_max_km;
    c.r_max = p.r_max_km;
    c.alt_norm = std::exp(-c.beta * c.m) - std::exp(-c.beta * c.big_m);
    return c;
}

// exp(-a l^2 - beta^2/(4a)) * \int_{t_lo}^{t_hi} exp(a (t - kappa)^2) dt
SeriesSum case1_core(const Case1Consts& c, long double l, long double t_lo, long double t_hi,
                     const SeriesControl& ctl) {
    const long double log_scale = -c.a * l * l - c.beta * c.beta / (4.0L * c.a);
    SeriesSum s;
    merge(s, gaussian_growth_series(c.a, t_hi - c.kappa, log_scale, ctl), 1.0L);
    merge(s, gaussian_growth_series(c.a, t_lo - c.kappa, log_scale, ctl), -1.0L);
    return s;
}

DistanceValue case1_cdf(const NetworkParams& p, double l, double u_a, double u_b,
                        const SeriesControl& ctl, bool with_prefactor = true) {
    const auto c = case1_consts(p);
    const long double t_hi = std::sqrt(static_cast<long double>(l) * l - u_a * u_a);
    const long double t_lo = std::sqrt(static_cast<long double>(l) * l - u_b * u_b);
    const auto core = case1_core(c, l, t_lo, t_hi, ctl);
    long double series = c.beta * core.value;
    if (!with_prefactor) {
        // Same sum without the exp(-a l^2 - beta^2/(4a)) scale and beta weight.
        series /= c.beta * std::exp(-c.a * l * l - c.beta * c.beta / (4.0L * c.a));
    }
    const long double ea = std::exp(-c.a * u_a * u_a);
    const long double eb = std::exp(-c.a * u_b * u_b);
    const long double f2 = ea * std::exp(-c.beta * t_hi) - eb * std::exp(-c.beta * t_lo) + series;
    const long double band = std::exp(-c.beta * c.m) * (ea - eb) - f2;
    const long double value = (1.0L - ea) / c.horiz_norm + band / (c.horiz_norm * c.alt_norm);
    return {static_cast<double>(value), false, core.truncated, core.terms};
}

DistanceValue case1_pdf(const NetworkParams& p, double l, double u_a, double u_b,
                        const SeriesControl& ctl) {
    const auto c = case1_consts(p);
    const long double t_hi = std::sqrt(static_cast<long double>(l) * l - u_a * u_a);
    const long double t_lo = std::sqrt(static_cast<long double>(l) * l - u_b * u_b);
    const auto core = case1_core(c, l, t_lo, t_hi, ctl);
    const long double value =
        2.0L * c.a * c.beta * l * core.value / (c.horiz_norm * c.alt_norm);
    return {static_cast<double>(value), false, core.truncated, core.terms};
}

struct Case2Consts {
    long double k, s, alt_norm, tail_lo, r2;
};

Case2Consts case2_consts(const NetworkParams& p) {
    Case2Consts c{};
    c.k = p.case2_k_s;
    c.s = p.case2_lambda_s;
    c.tail_lo = std::exp(-std::pow(p.h_min_km / c.s, c.k));
    c.alt_norm = c.tail_lo - std::exp(-std::pow(p.h_max_km / c.s, c.k));
    c.r2 = static_cast<long double>(p.r_max_km) * p.r_max_km;
    return c;
}

DistanceValue case2_cdf(const NetworkParams& p, double l, double u_a, double u_b,
                        const SeriesControl& ctl) {
    const auto c = case2_consts(p);
    const long double l2 = static_cast<long double>(l) * l;
    const long double ua2 = static_cast<long double>(u_a) * u_a;
    const long double ub2 = static_cast<long double>(u_b) * u_b;
    SeriesSum e;
    merge(e, stretched_decay_series(c.k, c.s, l2 - ua2, ctl), 1.0L);
    merge(e, stretched_decay_series(c.k, c.s, l2 - ub2, ctl), -1.0L);
    const long double band = c.tail_lo * (ub2 - ua2) - e.value;
    const long double value = ua2 / c.r2 + band / (c.r2 * c.alt_norm);
    return {static_cast<double>(value), false, e.truncated, e.terms};
}

DistanceValue case2_pdf(const NetworkParams& p, double l, double u_a, double u_b) {
    const auto c = case2_consts(p);
    const long double l2 = static_cast<long double>(l) * l;
    const long double w_lo = l2 - static_cast<long double>(u_b) * u_b;
    const long double w_hi = l2 - static_cast<long double>(u_a) * u_a;
    const long double value = 2.0L * l / (c.r2 * c.alt_norm) *
                              (std::exp(-std::pow(w_lo / (c.s * c.s), c.k / 2.0L)) -
                               std::exp(-std::pow(w_hi / (c.s * c.s), c.k / 2.0L)));
    return {static_cast<double>(value), false, false, 0};
}

void check_distance(double l, const Support& s) {
    if (!(l >= s.l_min && l <= s.l_max)) {
        throw DomainError("slant distance " + std::to_string(l) + " km outside [" +
                          std::to_string(s.l_min) + ", " + std::to_string(s.l_max) + "]");
    }
}

enum class Law { Cdf, Pdf };

DistanceValue closed_law(Law law, const SpatialCase& c, double l, const NetworkParams& p,
                         const SeriesControl& series) {
    series.validate();
    const Support sup = support_of(c, p);
    check_distance(l, sup);
    const auto fallback = [&] {
        const auto q = law == Law::Cdf ? numeric_cdf(c, l, p) : numeric_pdf(c, l, p);
        return DistanceValue{q.value, true, false, 0};
    };
    const auto split = split_for(l, p.r_max_km, p.h_min_km, p.h_max_km);
    const auto case1 = [&]() -> DistanceValue {
        if (p.case1_k_s != 1.0) return fallback();
        return law == Law::Cdf ? case1_cdf(p, l, split.u_a, split.u_b, series)
                               : case1_pdf(p, l, split.u_a, split.u_b, series);
    };
    const auto case2 = [&]() -> DistanceValue {
        return law == Law::Cdf ? case2_cdf(p, l, split.u_a, split.u_b, series)
                               : case2_pdf(p, l, split.u_a, split.u_b);
    };
    DistanceValue out = std::visit(
        overloaded{
            [&](const cases::Case1&) { return case1(); },
            [&](const cases::Case2&) { return case2(); },
            [&](const cases::Case3& m) {
                DistanceValue v{};
                for (auto [w, part] : {std::pair{m.p1, 1}, std::pair{m.p2, 2}}) {
                    if (w == 0.0) continue;
                    const auto d = part == 1 ? case1() : case2();
                    v.value += w * d.value;
                    v.used_fallback = v.used_fallback || d.used_fallback;
                    v.series_truncated = v.series_truncated || d.series_truncated;
                    v.terms_used = std::max(v.terms_used, d.terms_used);
                }
                return v;
            },
            [&](const cases::SphericalBaseline&) { return fallback(); },
        },
        c);
    if (law == Law::Cdf) out.value = std::clamp(out.value, 0.0, 1.0);
    else out.value = std::max(out.value, 0.0);
    return out;
}

}  // namespace

void SeriesControl::validate() const {
    if (n_terms < 1) throw InvalidParams("series n_terms must be >= 1");
    if (!(tail_tol > 0.0)) throw InvalidParams("series tail_tol must be > 0");
}

DistanceValue closed_cdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                         const SeriesControl& series) {
    return closed_law(Law::Cdf, c, l_km, p, series);
}

DistanceValue closed_pdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                         const SeriesControl& series) {
    return closed_law(Law::Pdf, c, l_km, p, series);
}

QuadResult numeric_cdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                       const QuadratureControl& ctl) {
    ctl.validate();
    const CaseLaw law(c, p);
    const Support sup = law.support();
    check_distance(l_km, sup);
    const auto split = split_for(l_km, sup.r_max, sup.h_min, sup.h_max);
    const auto inner_ctl = ctl.nested();
    auto altitude_mass = [&](double r) {
        const double top = std::min(sup.h_max, std::sqrt(std::max(0.0, l_km * l_km - r * r)));
        if (top <= sup.h_min) return 0.0;
        return integrate([&](double h) { return law.joint_pdf(r, h); }, sup.h_min, top, inner_ctl)
            .value;
    };
    // The altitude limit has a kink at u_a and a square-root edge at u_b.
    QuadResult full = integrate(altitude_mass, 0.0, split.u_a, ctl);
    const QuadResult band = integrate(altitude_mass, split.u_a, split.u_b, ctl);
    full.value += band.value;
    full.error += band.error + inner_ctl.abs_tol * sup.r_max;
    full.subdivisions += band.subdivisions;
    return full;
}

QuadResult numeric_pdf(const SpatialCase& c, double l_km, const NetworkParams& p,
                       const QuadratureControl& ctl) {
    ctl.validate();
    const CaseLaw law(c, p);
    const Support sup = law.support();
    check_distance(l_km, sup);
    const auto split = split_for(l_km, sup.r_max, sup.h_min, sup.h_max);
    auto integrand = [&](double u) {
        const double t = std::clamp(std::sqrt(std::max(0.0, l_km * l_km - u * u)), sup.h_min,
                                    sup.h_max);
        return law.joint_pdf(u, t) * l_km / t;
    };
    return integrate(integrand, split.u_a, split.u_b, ctl);
}

double single_piece_cdf(bool case1, double l_km, const NetworkParams& p,
                        const SeriesControl& series, bool with_series_prefactor) {
    if (l_km < p.r_max_km) {
        throw DomainError("the single-piece laws need l >= r_max for a real sqrt(l^2 - r_max^2)");
    }
    if (case1) return case1_cdf(p, l_km, 0.0, p.r_max_km, series, with_series_prefactor).value;
    return case2_cdf(p, l_km, 0.0, p.r_max_km, series).value;
}

double single_piece_pdf(bool case1, double l_km, const NetworkParams& p,
                        const SeriesControl& series) {
    if (l_km < p.r_max_km) {
        throw DomainError("the single-piece laws need l >= r_max for a real sqrt(l^2 - r_max^2)");
    }
    if (case1) return case1_pdf(p, l_km, 0.0, p.r_max_km, series).value;
    return case2_pdf(p, l_km, 0.0, p.r_max_km).value;
}

}  // namespace sondenet
