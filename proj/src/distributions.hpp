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
#include "rng.hpp"

#include <vector>

namespace sondenet {

/// Horizontal-radius laws: uniform over the disk (trajectory radii of
/// circular motion) or nearest-point distance of a planar PPP truncated to
/// [0, r_max] (irregular motion).
enum class HorizontalModel { Circular, Irregular };

double horizontal_cdf(HorizontalModel model, double r_km, const NetworkParams& p);
double horizontal_pdf(HorizontalModel model, double r_km, const NetworkParams& p);
double horizontal_quantile(HorizontalModel model, double u, const NetworkParams& p);

/// Weibull(shape, scale) truncated to [lo, hi].
class TruncatedWeibull {
public:
    TruncatedWeibull(double shape, double scale, double lo, double hi);

    double pdf(double h) const;  // 0 outside [lo, hi]
    double cdf(double h) const;
    double quantile(double u) const;

    double shape() const { return shape_; }
    double scale() const { return scale_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    /// exp(-(lo/scale)^k) - exp(-(hi/scale)^k).
    double mass() const { return mass_; }

private:
    double shape_, scale_, lo_, hi_;
    double tail_lo_, mass_;
};

TruncatedWeibull case1_altitude(const NetworkParams& p);
TruncatedWeibull case2_altitude(const NetworkParams& p);

/// Truncated-Weibull(k_s, lambda_s) altitude density over [h_min, h_max].
/// Throws DomainError when h lies outside the band.
double vertical_pdf(double h_km, double k_s, double lambda_s, const NetworkParams& p);

/// Precomputed joint (r, h) law of a case. Cheap to evaluate; build once per
/// (case, params) and reuse inside integrands.
class CaseLaw {
public:
    CaseLaw(const SpatialCase& c, const NetworkParams& p);

    /// Joint density in 1/km^2; zero outside the support.
    double joint_pdf(double r, double h) const;
    /// Altitude marginal (mixture for Case 3, hemisphere slice area for the
    /// spherical baseline); zero outside the support.
    double vertical_pdf(double h) const;
    Support support() const;
    bool is_sphere() const { return sphere_; }

    /// One placement drawn from the joint law by inversion (rejection for the
    /// spherical baseline).
    Placement sample(RandomStream& rng) const;
    /// Mean node count lambda_n * volume.
    double mean_count() const { return mean_count_; }

private:
    double h_min_, r_max_, h_max_;
    TruncatedWeibull alt1_, alt2_;
    double w1_ = 0.0, w2_ = 0.0;
    double lambda_ = 0.0, irregular_norm_ = 1.0;
    bool sphere_ = false;
    double rho_ = 0.0, sphere_volume_ = 0.0;
    double mean_count_ = 0.0;
};

double vertical_marginal_pdf(const SpatialCase& c, double h_km, const NetworkParams& p);

/// Joint density of (r, h) in 1/km^2; zero outside the support.
double joint_pdf(const SpatialCase& c, double r_km, double h_km, const NetworkParams& p);

/// Volume (km^3) in which the network's Poisson count is drawn.
double network_volume(const SpatialCase& c, const NetworkParams& p);

Placement sample_placement(const SpatialCase& c, const NetworkParams& p, RandomStream& rng);

std::vector<Placement> sample_network(const SpatialCase& c, const NetworkParams& p,
                                      RandomStream& rng);

}  // namespace sondenet
