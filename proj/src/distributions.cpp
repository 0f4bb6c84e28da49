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

#include "distributions.hpp"

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sondenet {

namespace {

using std::numbers::pi;

// 1 - exp(-pi * lambda * r^2), accurate for small arguments.
double disk_void_complement(double lambda, double r) { return -std::expm1(-pi * lambda * r * r); }

void check_radius(double r_km, const NetworkParams& p) {
    if (!(r_km >= 0.0 && r_km <= p.r_max_km)) {
        throw DomainError("horizontal radius " + std::to_string(r_km) + " km outside [0, " +
                          std::to_string(p.r_max_km) + "]");
    }
}

void check_density(const NetworkParams& p) {
    if (!(p.lambda_n > 0.0)) {
        throw DomainError("irregular horizontal law is degenerate for lambda_n = 0");
    }
}

double truncated_hemisphere_volume(double radius, double h_min) {
    return pi * (radius * radius * (radius - h_min) -
                 (radius * radius * radius - h_min * h_min * h_min) / 3.0);
}

double uniform01(RandomStream& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace

double horizontal_cdf(HorizontalModel model, double r_km, const NetworkParams& p) {
    check_radius(r_km, p);
    const double rm = p.r_max_km;
    if (model == HorizontalModel::Circular) return (r_km / rm) * (r_km / rm);
    check_density(p);
    return disk_void_complement(p.lambda_n, r_km) / disk_void_complement(p.lambda_n, rm);
}

double horizontal_pdf(HorizontalModel model, double r_km, const NetworkParams& p) {
    check_radius(r_km, p);
    const double rm = p.r_max_km;
    if (model == HorizontalModel::Circular) return 2.0 * r_km / (rm * rm);
    check_density(p);
    const double lam = p.lambda_n;
    return 2.0 * pi * lam * r_km * std::exp(-pi * lam * r_km * r_km) /
           disk_void_complement(lam, rm);
}

double horizontal_quantile(HorizontalModel model, double u, const NetworkParams& p) {
    const double rm = p.r_max_km;
    if (model == HorizontalModel::Circular) return rm * std::sqrt(u);
    check_density(p);
    const double lam = p.lambda_n;
    const double r = std::sqrt(-std::log1p(-u * disk_void_complement(lam, rm)) / (pi * lam));
    return std::min(r, rm);
}

TruncatedWeibull::TruncatedWeibull(double shape, double scale, double lo, double hi)
    : shape_(shape), scale_(scale), lo_(lo), hi_(hi) {
    if (!(shape > 0.0 && scale > 0.0)) throw InvalidParams("Weibull shape and scale must be > 0");
    if (!(lo >= 0.0 && lo < hi)) throw InvalidParams("Weibull truncation needs 0 <= lo < hi");
    tail_lo_ = std::exp(-std::pow(lo / scale, shape));
    mass_ = tail_lo_ - std::exp(-std::pow(hi / scale, shape));
    if (!(mass_ > 0.0)) throw InvalidParams("Weibull law has no mass on the truncation band");
}

double TruncatedWeibull::pdf(double h) const {
    if (h < lo_ || h > hi_) return 0.0;
    const double z = h / scale_;
    return shape_ / scale_ * std::pow(z, shape_ - 1.0) * std::exp(-std::pow(z, shape_)) / mass_;
}

double TruncatedWeibull::cdf(double h) const {
    if (h <= lo_) return 0.0;
    if (h >= hi_) return 1.0;
    return (tail_lo_ - std::exp(-std::pow(h / scale_, shape_))) / mass_;
}

double TruncatedWeibull::quantile(double u) const {
    const double h = scale_ * std::pow(-std::log(tail_lo_ - u * mass_), 1.0 / shape_);
    return std::clamp(h, lo_, hi_);
}

TruncatedWeibull case1_altitude(const NetworkParams& p) {
    return {p.case1_k_s, p.case1_lambda_s, p.h_min_km, p.h_max_km};
}

TruncatedWeibull case2_altitude(const NetworkParams& p) {
    return {p.case2_k_s, p.case2_lambda_s, p.h_min_km, p.h_max_km};
}

double vertical_pdf(double h_km, double k_s, double lambda_s, const NetworkParams& p) {
    if (!(h_km >= p.h_min_km && h_km <= p.h_max_km)) {
        throw DomainError("altitude " + std::to_string(h_km) + " km outside [" +
                          std::to_string(p.h_min_km) + ", " + std::to_string(p.h_max_km) + "]");
    }
    return TruncatedWeibull(k_s, lambda_s, p.h_min_km, p.h_max_km).pdf(h_km);
}

CaseLaw::CaseLaw(const SpatialCase& c, const NetworkParams& p)
    : h_min_(p.h_min_km),
      r_max_(p.r_max_km),
      h_max_(p.h_max_km),
      alt1_(case1_altitude(p)),
      alt2_(case2_altitude(p)) {
    std::visit(overloaded{
                   [&](const cases::Case1&) { w1_ = 1.0; },
                   [&](const cases::Case2&) { w2_ = 1.0; },
                   [&](const cases::Case3& m) {
                       w1_ = m.p1;
                       w2_ = m.p2;
                   },
                   [&](const cases::SphericalBaseline& s) {
                       sphere_ = true;
                       rho_ = s.radius_km;
                       r_max_ = rho_;
                       h_max_ = rho_;
                       sphere_volume_ = truncated_hemisphere_volume(rho_, h_min_);
                   },
               },
               c);
    if (w1_ > 0.0) {
        check_density(p);
        lambda_ = p.lambda_n;
        irregular_norm_ = disk_void_complement(lambda_, p.r_max_km);
    }
    mean_count_ = p.lambda_n * (sphere_ ? sphere_volume_
                                        : pi * r_max_ * r_max_ * (h_max_ - h_min_));
}

Placement CaseLaw::sample(RandomStream& rng) const {
    if (sphere_) {
        // Uniform in the cylinder around the truncated hemisphere, kept when
        // inside the ball.
        for (;;) {
            const double r = rho_ * std::sqrt(uniform01(rng));
            const double h = h_min_ + (rho_ - h_min_) * uniform01(rng);
            if (r * r + h * h <= rho_ * rho_) return Placement::from(r, h);
        }
    }
    bool first = w2_ == 0.0;
    if (w1_ > 0.0 && w2_ > 0.0) first = uniform01(rng) < w1_;
    if (first) {
        const double u = uniform01(rng);
        const double r = std::min(
            r_max_, std::sqrt(-std::log1p(-u * irregular_norm_) / (pi * lambda_)));
        return Placement::from(r, alt1_.quantile(uniform01(rng)));
    }
    const double r = r_max_ * std::sqrt(uniform01(rng));
    return Placement::from(r, alt2_.quantile(uniform01(rng)));
}

double CaseLaw::joint_pdf(double r, double h) const {
    if (r < 0.0 || h < h_min_ || r > r_max_ || h > h_max_) return 0.0;
    if (sphere_) {
        if (r * r + h * h > rho_ * rho_) return 0.0;
        return 2.0 * pi * r / sphere_volume_;
    }
    double f = 0.0;
    if (w1_ > 0.0) {
        f += w1_ * 2.0 * pi * lambda_ * r * std::exp(-pi * lambda_ * r * r) / irregular_norm_ *
             alt1_.pdf(h);
    }
    if (w2_ > 0.0) f += w2_ * 2.0 * r / (r_max_ * r_max_) * alt2_.pdf(h);
    return f;
}

double CaseLaw::vertical_pdf(double h) const {
    if (sphere_) {
        if (h < h_min_ || h > rho_) return 0.0;
        return pi * (rho_ * rho_ - h * h) / sphere_volume_;
    }
    double f = 0.0;
    if (w1_ > 0.0) f += w1_ * alt1_.pdf(h);
    if (w2_ > 0.0) f += w2_ * alt2_.pdf(h);
    return f;
}

Support CaseLaw::support() const {
    return {r_max_, h_min_, h_max_, h_min_, sphere_ ? rho_ : std::hypot(r_max_, h_max_)};
}

double vertical_marginal_pdf(const SpatialCase& c, double h_km, const NetworkParams& p) {
    return CaseLaw(c, p).vertical_pdf(h_km);
}

double joint_pdf(const SpatialCase& c, double r_km, double h_km, const NetworkParams& p) {
    return CaseLaw(c, p).joint_pdf(r_km, h_km);
}

double network_volume(const SpatialCase& c, const NetworkParams& p) {
    if (const auto* s = std::get_if<cases::SphericalBaseline>(&c)) {
        return truncated_hemisphere_volume(s->radius_km, p.h_min_km);
    }
    return pi * p.r_max_km * p.r_max_km * (p.h_max_km - p.h_min_km);
}

Placement sample_placement(const SpatialCase& c, const NetworkParams& p, RandomStream& rng) {
    return CaseLaw(c, p).sample(rng);
}

std::vector<Placement> sample_network(const SpatialCase& c, const NetworkParams& p,
                                      RandomStream& rng) {
    if (p.lambda_n == 0.0) return {};
    const CaseLaw law(c, p);
    std::vector<Placement> nodes;
    if (!(law.mean_count() > 0.0)) return nodes;
    const auto n = std::poisson_distribution<long long>(law.mean_count())(rng);
    nodes.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) nodes.push_back(law.sample(rng));
    return nodes;
}

}  // namespace sondenet
