// SPDX-License-Identifier: Apache-2.0
//
// twrelay: outage analysis for two-way fixed-gain AF relay networks
// Copyright (C) 2026 the twrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Test-side numeric oracles, independent of the library implementation
// paths they are used to check.

#ifndef TWRELAY_TESTS_ORACLES_HPP
#define TWRELAY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Gauss-Kronrod 7-15 panel with recursive bisection (QUADPACK nodes).
namespace gk {
inline constexpr double xk[8] = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126,
};
inline constexpr double wk[8] = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299785,
    0.0229353220105292,
};
inline constexpr double wg[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697,
};
} // namespace gk

inline void gk15(const std::function<double(double)>& f, double a, double b, double& kronrod,
                 double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = gk::wk[0] * f(c);
    double resg = gk::wg[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        const double v = f(c - h * gk::xk[i]) + f(c + h * gk::xk[i]);
        resk += gk::wk[i] * v;
        if (i % 2 == 0) resg += gk::wg[i / 2] * v;
    }
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}

inline double integrate_impl(const std::function<double(double)>& f, double a, double b, double tol,
                             int depth) {
    double k, e;
    gk15(f, a, b, k, e);
    if (e <= tol || depth <= 0) return k;
    const double c = 0.5 * (a + b);
    return integrate_impl(f, a, c, 0.5 * tol, depth - 1) +
           integrate_impl(f, c, b, 0.5 * tol, depth - 1);
}

// Adaptive integral of f over [a, b] to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    return integrate_impl(f, a, b, tol, 40);
}

// Adaptive integral with a relative target: a first whole-interval pass
// sizes the absolute tolerance.
inline double integrate_rel(const std::function<double(double)>& f, double a, double b,
                            double rel = 1e-13) {
    double rough, err;
    gk15(f, a, b, rough, err);
    const double tol = std::max(std::abs(rough) * rel, 1e-300);
    return integrate_impl(f, a, b, tol, 40);
}

// Integral over [a, inf) via the rational substitution x = a + t/(1-t).
inline double integrate_to_inf(const std::function<double(double)>& f, double a,
                               double tol = 1e-12) {
    return integrate(
        [&](double t) {
            const double om = 1.0 - t;
            const double x = a + t / om;
            return f(x) / (om * om);
        },
        0.0, 1.0, tol);
}

// Two-sided Kolmogorov-Smirnov statistic of sorted samples against cdf.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double fx = cdf(samples[i]);
        d = std::max(d, std::abs((i + 1) / n - fx));
        d = std::max(d, std::abs(fx - i / n));
    }
    return d;
}

// Asymptotic two-sided critical value at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

} // namespace oracles

#endif
