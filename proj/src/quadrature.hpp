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

#include "error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sondenet {

struct QuadratureControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 256;

    /// Control for an integral nested inside this one.
    QuadratureControl nested() const { return {abs_tol / 10.0, rel_tol / 10.0, max_subdivisions}; }

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

namespace detail {

struct Panel {
    double a, b, value, error;
};

using Kronrod15 = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss7 = boost::math::quadrature::gauss<double, 7>;

template <class F>
Panel gk15_panel(F& f, double a, double b) {
    const auto& x = Kronrod15::abscissa();
    const auto& wk = Kronrod15::weights();
    const auto& wg = Gauss7::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    double fv[15];
    const double f0 = f(c);
    fv[0] = f0;
    double kron = wk[0] * f0;
    double gauss = wg[0] * f0;
    double abs_sum = wk[0] * std::abs(f0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double f1 = f(c - h * x[i]);
        const double f2 = f(c + h * x[i]);
        fv[2 * i - 1] = f1;
        fv[2 * i] = f2;
        kron += wk[i] * (f1 + f2);
        abs_sum += wk[i] * (std::abs(f1) + std::abs(f2));
        if (i % 2 == 0) gauss += wg[i / 2] * (f1 + f2);
    }
    // QUADPACK error scaling: |K - G| sharpened by the integrand's spread
    // around its mean, floored at rounding level.
    const double mean = 0.5 * kron;
    double asc = wk[0] * std::abs(fv[0] - mean);
    for (std::size_t i = 1; i < x.size(); ++i) {
        asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
    }
    asc *= std::abs(h);
    double err = std::abs((kron - gauss) * h);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    const double res_abs = abs_sum * std::abs(h);
    const double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * res_abs);
    }
    return {a, b, kron * h, err};
}

}  // namespace detail

/// Global adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The panel with the largest error estimate is bisected until the summed
/// error meets max(abs_tol, rel_tol * |value|). Throws ConvergenceError,
/// carrying the best estimate, when the subdivision budget runs out.
/// Nodes are interior, so integrable endpoint singularities are tolerated.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureControl& ctl) {
    if (!(a < b)) {
        if (a == b) return {};
        throw DomainError("quadrature needs lower < upper");
    }
    auto by_error = [](const detail::Panel& l, const detail::Panel& r) { return l.error < r.error; };
    std::vector<detail::Panel> heap;
    heap.reserve(static_cast<std::size_t>(ctl.max_subdivisions) + 1);
    heap.push_back(detail::gk15_panel(f, a, b));
    double value = heap.front().value;
    double error = heap.front().error;
    int splits = 0;
    while (error > std::max(ctl.abs_tol, ctl.rel_tol * std::abs(value))) {
        if (splits >= ctl.max_subdivisions) {
            throw ConvergenceError("quadrature did not converge within " +
                                       std::to_string(ctl.max_subdivisions) + " subdivisions",
                                   value, error);
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const detail::Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw ConvergenceError("quadrature panel collapsed below machine resolution", value,
                                   error);
        }
        const auto left = detail::gk15_panel(f, worst.a, mid);
        const auto right = detail::gk15_panel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        ++splits;
    }
    // Re-sum to shed drift from the incremental updates.
    value = 0.0;
    error = 0.0;
    for (const auto& p : heap) {
        value += p.value;
        error += p.error;
    }
    return {value, error, splits};
}

}  // namespace sondenet
