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

#include "analytic_cp.hpp"

#include "channel.hpp"
#include "distributions.hpp"
#include "error.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <span>

namespace sondenet {

namespace {

using std::numbers::pi;

struct Terms {
    bool noise;
    bool interference;
};

// Everything the coverage integrand needs for one non-mixture case.
class CoverageModel {
public:
    CoverageModel(const SpatialCase& c, const NetworkParams& p, bool tabulate = false)
        : law_(c, p),
          sup_(law_.support()),
          p_(p),
          power_(p.alpha * p.epsilon + 1.0) {
        if (tabulate && p.lambda_n > 0.0) build_table();
    }

    // exponent weight q: the fading threshold is mu * T * q * (sigma'^2 + I).
    double q(double l, double h) const {
        return std::pow(l, p_.alpha + 1.0) * (h - sup_.h_min) / std::pow(h, power_);
    }

    // \int f_H(y) c y^p / (mu (y - m) + c y^p) dy: the probability-weighted
    // share of an interferer at normalised strength c that does NOT survive
    // the fading draw. The integrand steps from f_H to 0 across
    // y - m ~ c m^p / mu, so it is integrated in v = log(y - m).
    double blocked_share(double c, const QuadratureControl& ctl) const {
        if (c <= 0.0) return 0.0;
        if (table_) {
            const double u = std::log(c);
            if (u >= kTableLo && u <= kTableHi) return (*table_)(u);
        }
        return blocked_share_direct(c, ctl);
    }

    double blocked_share_direct(double c, const QuadratureControl& ctl) const {
        const double m = sup_.h_min;
        const double span = sup_.h_max - m;
        const double d_lo = span * 1e-14;
        auto integrand = [&](double v) {
            const double d = std::exp(v);
            const double y = m + d;
            const double cy = c * std::pow(y, power_);
            return law_.vertical_pdf(y) * cy / (p_.mu * d + cy) * d;
        };
        // Below d_lo the fraction is 1 to within d_lo / width.
        const double tail = law_.vertical_pdf(m) * d_lo;
        return tail + integrate(integrand, std::log(d_lo), std::log(span), ctl).value;
    }

    double laplace(double s, double l, const QuadratureControl& ctl) const {
        if (s <= 0.0 || p_.lambda_n == 0.0 || l >= sup_.l_max) return 1.0;
        const auto inner = ctl.nested();
        auto integrand = [&](double x) {
            return blocked_share(s * std::pow(x, -p_.alpha - 1.0), inner) * x;
        };
        const double mass = integrate(integrand, l, sup_.l_max, ctl).value;
        return std::exp(-2.0 * pi * p_.lambda_n * mass);
    }

    QuadResult coverage(double t_lin, double noise, Terms terms,
                        const QuadratureControl& ctl) const {
        const auto ctl_h = ctl.nested();
        const auto ctl_x = ctl_h.nested();
        const double rho = sup_.l_max;
        const bool sphere = law_.is_sphere();
        auto at = [&](double r, double h) {
            const double f = law_.joint_pdf(r, h);
            if (f == 0.0) return 0.0;
            const double l = std::hypot(r, h);
            const double s = p_.mu * t_lin * q(l, h);
            double v = f;
            if (terms.noise) v *= std::exp(-s * noise);
            if (terms.interference) v *= laplace(s, l, ctl_x);
            return v;
        };
        auto over_h = [&](double r) {
            const double top =
                sphere ? std::sqrt(std::max(0.0, rho * rho - r * r)) : sup_.h_max;
            if (top <= sup_.h_min) return 0.0;
            return integrate([&](double h) { return at(r, h); }, sup_.h_min, top, ctl_h).value;
        };
        const double r_top = sphere ? std::sqrt(rho * rho - sup_.h_min * sup_.h_min) : sup_.r_max;
        return integrate(over_h, 0.0, r_top, ctl);
    }

private:
    // The blocked share depends on its argument only, so the coverage
    // integral reads it from a cubic spline in log c. The spline step keeps
    // the interpolation error near 1e-10; arguments outside the range are
    // integrated directly.
    static constexpr double kTableLo = -46.0;
    static constexpr double kTableHi = 30.0;
    static constexpr double kTableStep = 0.01;

    void build_table() {
        const auto n = static_cast<std::size_t>(std::lround((kTableHi - kTableLo) / kTableStep)) + 1;
        std::vector<double> values(n);
        const QuadratureControl ctl{1e-12, 1e-11, 400};
        for (std::size_t i = 0; i < n; ++i) {
            values[i] = blocked_share_direct(std::exp(kTableLo + kTableStep * static_cast<double>(i)), ctl);
        }
        table_ = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
            values.begin(), values.end(), kTableLo, kTableStep);
    }

    CaseLaw law_;
    Support sup_;
    NetworkParams p_;
    double power_;
    std::shared_ptr<const boost::math::interpolators::cardinal_cubic_b_spline<double>> table_;
};

double threshold_linear(double t_s_db) {
    const double t = db_to_linear(t_s_db);
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("threshold " + std::to_string(t_s_db) +
                          " dB is not a positive finite linear value");
    }
    return t;
}

std::vector<CpResult> evaluate(const SpatialCase& c, const NetworkParams& p,
                               std::span<const double> ts_db, const QuadratureControl& ctl,
                               Terms terms, CpMethod method, bool tabulate = true) {
    p.validate();
    validate_case(c, p);
    ctl.validate();
    std::vector<double> t_lin;
    for (double t : ts_db) t_lin.push_back(threshold_linear(t));
    const double noise = normalized_noise(p);

    std::vector<std::pair<CoverageModel, double>> parts;
    const bool table = tabulate && terms.interference;
    if (const auto* m = std::get_if<cases::Case3>(&c)) {
        if (m->p1 != 0.0) parts.emplace_back(CoverageModel(cases::Case1{}, p, table), m->p1);
        if (m->p2 != 0.0) parts.emplace_back(CoverageModel(cases::Case2{}, p, table), m->p2);
    } else {
        parts.emplace_back(CoverageModel(c, p, table), 1.0);
    }

    std::vector<CpResult> out(t_lin.size());
    for (std::size_t i = 0; i < t_lin.size(); ++i) {
        CpResult& r = out[i];
        r.method = method;
        for (const auto& [model, w] : parts) {
            const auto q = model.coverage(t_lin[i], noise, terms, ctl);
            r.cp += w * q.value;
            r.error_estimate += w * q.error;
        }
        r.cp = std::clamp(r.cp, 0.0, 1.0);
        r.ci_low = std::max(0.0, r.cp - r.error_estimate);
        r.ci_high = std::min(1.0, r.cp + r.error_estimate);
    }
    return out;
}

CpResult evaluate_one(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                      const QuadratureControl& ctl, Terms terms, CpMethod method,
                      bool tabulate = true) {
    const double t[] = {t_s_db};
    return evaluate(c, p, t, ctl, terms, method, tabulate).front();
}

}  // namespace

const char* cp_method_name(CpMethod m) {
    switch (m) {
        case CpMethod::Analytic: return "analytic";
        case CpMethod::UpperBound: return "upper_bound";
        case CpMethod::MonteCarlo: return "monte_carlo";
    }
    return "?";
}

CpMethod parse_cp_method(const std::string& name) {
    if (name == "analytic") return CpMethod::Analytic;
    if (name == "upper_bound") return CpMethod::UpperBound;
    if (name == "monte_carlo" || name == "mc") return CpMethod::MonteCarlo;
    throw InvalidParams("unknown method '" + name + "' (analytic, upper_bound, monte_carlo)");
}

QuadratureControl cp_default_control() { return {1e-6, 1e-6, 400}; }

double normalized_noise(const NetworkParams& p) {
    const double gamma = specific_attenuation(itu_coefficients(p.f_ghz), p.rain_rate_mm_h);
    const double gains = dbm_to_watt(p.p_t_dbm) * db_to_linear(p.g_t_db) * db_to_linear(p.g_r_db);
    return dbm_to_watt(p.sigma2_dbm) * p.r_corr * gamma / gains;
}

double laplace_interference(double s, double l_tr_km, const SpatialCase& c,
                            const NetworkParams& p, const QuadratureControl& ctl) {
    if (!(s >= 0.0)) throw DomainError("Laplace argument must be >= 0");
    ctl.validate();
    const Support sup = support_of(c, p);
    if (!(l_tr_km >= sup.l_min && l_tr_km <= sup.l_max)) {
        throw DomainError("target distance " + std::to_string(l_tr_km) + " km outside support");
    }
    // An empty field or a zero argument needs no case law (Case 1 has none at
    // lambda_n = 0).
    if (s == 0.0 || p.lambda_n == 0.0) return 1.0;
    return CoverageModel(c, p).laplace(s, l_tr_km, ctl);
}

CpResult cp_exact(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                  const QuadratureControl& ctl) {
    return evaluate_one(c, p, t_s_db, ctl, {true, true}, CpMethod::Analytic);
}

CpResult cp_upper_bound(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                        const QuadratureControl& ctl) {
    return evaluate_one(c, p, t_s_db, ctl, {false, true}, CpMethod::UpperBound);
}

std::vector<CpResult> cp_curve(const SpatialCase& c, const NetworkParams& p,
                               std::span<const double> ts_db, CpMethod method,
                               const QuadratureControl& ctl) {
    switch (method) {
        case CpMethod::Analytic: return evaluate(c, p, ts_db, ctl, {true, true}, method);
        case CpMethod::UpperBound: return evaluate(c, p, ts_db, ctl, {false, true}, method);
        case CpMethod::MonteCarlo: break;
    }
    throw InvalidParams("cp_curve evaluates analytic and upper_bound only");
}

CpResult detail::cp_exact_direct(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                                 const QuadratureControl& ctl) {
    return evaluate_one(c, p, t_s_db, ctl, {true, true}, CpMethod::Analytic, false);
}

CpResult cp_noise_only(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                       const QuadratureControl& ctl) {
    return evaluate_one(c, p, t_s_db, ctl, {true, false}, CpMethod::Analytic);
}

}  // namespace sondenet
