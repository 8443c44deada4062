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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "twrelay/specfun.hpp"

using namespace twrelay::specfun;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Quadrature oracle for Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt.
double upper_gamma_oracle(int a, double x) {
    double upper = x + 60.0 + 12.0 * a;
    return oracles::integrate_rel(
        [a](double t) { return std::pow(t, a - 1) * std::exp(-t); }, x, upper);
}

// Quadrature oracle for K_nu via int_0^inf e^{-x cosh t} cosh(nu t) dt.
double bessel_k_oracle(int nu, double x) {
    double upper = 1.0;
    while (x * std::cosh(upper) - nu * upper < x + 120.0) upper += 0.5;
    return oracles::integrate_rel(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); }, 0.0, upper);
}

// Quadrature oracle for Ei_n(x) = int_1^inf e^{-x t} t^{-n} dt (any sign of n).
double exp_integral_oracle(int n, double x) {
    double upper = 2.0;
    while (x * upper - (n < 0 ? -n : 0) * std::log(upper) < x + 90.0) upper *= 1.5;
    return oracles::integrate_rel([&](double t) { return std::exp(-x * t) * std::pow(t, -n); },
                                  1.0, upper);
}

// Truncated ascending series for K_nu (integer nu >= 1), small x.
double bessel_k_series_small(int nu, double x, int terms) {
    const double lh = std::log(0.5 * x);
    double finite = 0.0;
    double fact_num = 1.0; // (nu - w - 1)!
    for (int m = 1; m <= nu - 1; ++m) fact_num *= m;
    double wfact = 1.0;
    double pw = std::pow(0.5 * x, -nu);
    for (int w = 0; w <= nu - 1; ++w) {
        if (w > 0) {
            fact_num /= (nu - w);
            wfact *= w;
            pw *= 0.25 * x * x;
        }
        finite += 0.5 * ((w % 2 == 0) ? 1.0 : -1.0) * fact_num / wfact * pw;
    }
    double logpart = 0.0;
    double c = std::pow(0.5 * x, nu);
    double fw = 1.0, fnw = 1.0;
    for (int m = 1; m <= nu; ++m) fnw *= m;
    for (int w = 0; w < terms; ++w) {
        if (w > 0) {
            fw *= w;
            fnw *= (nu + w);
            c *= 0.25 * x * x;
        }
        logpart += c / (fw * fnw) *
                   (lh - 0.5 * digamma_int(w + 1).value - 0.5 * digamma_int(nu + w + 1).value);
    }
    const double sign = (nu % 2 == 0) ? -1.0 : 1.0; // (-1)^{nu+1}
    return finite + sign * logpart;
}

} // namespace

TEST_CASE("gamma_int factorials") {
    CHECK(gamma_int(1).value == 1.0);
    CHECK(gamma_int(5).value == 24.0);
    // iterated integer product oracle
    long double f = 1.0L;
    for (int m = 1; m <= 14; ++m) f *= m;
    CHECK(gamma_int(15).value == static_cast<double>(f));
    CHECK(gamma_int(15).value == 87178291200.0);
    CHECK(gamma_int(171).value > 0.0);
    CHECK(std::isfinite(gamma_int(171).value));
    CHECK_THROWS_AS(gamma_int(0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_int(-3), std::invalid_argument);
    CHECK_THROWS_AS(gamma_int(172), std::overflow_error);
}

TEST_CASE("upper incomplete gamma against quadrature") {
    CHECK(upper_incomplete_gamma(3, 0.0).value == 2.0);
    CHECK(rel_err(upper_incomplete_gamma(1, 1.0).value, std::exp(-1.0)) < 1e-14);

    for (const auto& [a, x] : {std::pair{4, 2.5}, {7, 13.2}, {2, 0.3}, {10, 4.0}, {1, 9.0}}) {
        const double want = upper_gamma_oracle(a, x);
        CHECK(rel_err(upper_incomplete_gamma(a, x).value, want) < 1e-10);
    }
    // frozen oracle outputs
    CHECK(rel_err(upper_incomplete_gamma(4, 2.5).value, 4.5454567987983957825) < 1e-12);
    CHECK(rel_err(upper_incomplete_gamma(7, 13.2).value, 16.570403847013890613) < 1e-12);

    // monotone nonincreasing in x
    double prev = upper_incomplete_gamma(5, 0.0).value;
    for (double x : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double cur = upper_incomplete_gamma(5, x).value;
        CHECK(cur <= prev);
        prev = cur;
    }
    CHECK_THROWS_AS(upper_incomplete_gamma(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(upper_incomplete_gamma(2, -0.1), std::invalid_argument);
}

TEST_CASE("upper + lower incomplete gamma reassemble Gamma(a)") {
    for (int a : {1, 2, 5, 9}) {
        for (double x : {0.2, 1.0, 3.7, 11.0}) {
            const double lower = oracles::integrate(
                [a](double t) { return std::pow(t, a - 1) * std::exp(-t); }, 0.0, x, 1e-14);
            const double total = upper_incomplete_gamma(a, x).value + lower;
            CHECK(rel_err(total, gamma_int(a).value) < 1e-10);
        }
    }
}

TEST_CASE("digamma of integers") {
    CHECK(rel_err(digamma_int(1).value, -euler_gamma) < 1e-15);
    CHECK(rel_err(digamma_int(2).value, 1.0 - euler_gamma) < 1e-14);
    // harmonic-sum oracle at extended precision
    long double h = 0.0L;
    for (int m = 1; m <= 9; ++m) h += 1.0L / m;
    CHECK(rel_err(digamma_int(10).value, static_cast<double>(h) - euler_gamma) < 1e-14);
    CHECK(rel_err(digamma_int(10).value, 2.2517525890667211076) < 1e-14);
    CHECK_THROWS_AS(digamma_int(0), std::invalid_argument);
}

TEST_CASE("bessel K against the cosh-integral oracle") {
    CHECK(rel_err(bessel_k_int(1, 1.0).value, 0.60190723019723457474) < 1e-12);
    CHECK(rel_err(bessel_k_int(0, 2.0).value, 0.11389387274953343565) < 1e-12);
    CHECK(rel_err(bessel_k_int(5, 0.75).value, 1562.5870339691099687) < 1e-12);
    CHECK(rel_err(bessel_k_int(12, 7.5).value, 0.77047592924154030556) < 1e-12);
    CHECK(rel_err(bessel_k_int(3, 25.0).value, 4.1322634824909912193e-12) < 1e-12);

    for (int nu : {0, 1, 2, 5, 9}) {
        for (double x : {0.05, 0.6, 1.7, 4.2, 11.0}) {
            CHECK(rel_err(bessel_k_int(nu, x).value, bessel_k_oracle(nu, x)) < 1e-10);
        }
    }
}

TEST_CASE("bessel K order symmetry and domains") {
    for (int nu : {1, 3, 8}) {
        for (double x : {0.3, 2.5}) {
            CHECK(bessel_k_int(-nu, x).value == bessel_k_int(nu, x).value);
        }
    }
    CHECK_THROWS_AS(bessel_k_int(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k_int(1, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k_int(65, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_k_int(64, 1e-4), std::overflow_error);
}

TEST_CASE("bessel K recurrence") {
    for (double x : {0.01, 0.1, 1.0, 10.0}) {
        for (int nu = 1; nu <= 20; ++nu) {
            const double km1 = bessel_k_int(nu - 1, x).value;
            const double k0 = bessel_k_int(nu, x).value;
            const double kp1 = bessel_k_int(nu + 1, x).value;
            CHECK(rel_err(kp1, km1 + (2.0 * nu / x) * k0) < 1e-10);
        }
    }
}

TEST_CASE("bessel K small-argument series") {
    for (int nu : {1, 2, 4, 7}) {
        for (double x : {1e-3, 2.5e-4}) {
            const double want = bessel_k_series_small(nu, x, 8);
            CHECK(rel_err(bessel_k_int(nu, x).value, want) < 1e-6);
        }
    }
}

TEST_CASE("log bessel K matches the direct value and the tiny-x law") {
    for (int nu : {0, 1, 4, 11}) {
        for (double x : {0.02, 0.9, 3.0, 40.0}) {
            CHECK(rel_err(std::exp(log_bessel_k_int(nu, x)), bessel_k_int(nu, x).value) < 1e-10);
        }
    }
    // Out-of-range orders: ln K_nu(x) ~ ln(Gamma(nu)/2) + nu ln(2/x) as x -> 0.
    const double lk = log_bessel_k_int(64, 1e-4);
    double lgamma64 = 0.0;
    for (int m = 1; m <= 63; ++m) lgamma64 += std::log(static_cast<double>(m));
    const double want = lgamma64 - std::log(2.0) + 64.0 * std::log(2.0 / 1e-4);
    CHECK(std::isfinite(lk));
    CHECK(rel_err(lk, want) < 1e-8);
}

TEST_CASE("generalized exponential integral against quadrature") {
    CHECK(rel_err(gen_exp_integral(1, 1.0).value, 0.21938393439552027368) < 1e-12);
    CHECK(rel_err(gen_exp_integral(3, 1e-13).value, 0.5) < 1e-10);
    CHECK(rel_err(gen_exp_integral(-2, 1.0).value, 5.0 * std::exp(-1.0)) < 1e-12);
    CHECK(rel_err(gen_exp_integral(3, 0.4).value, 0.25728642331994477986) < 1e-12);
    CHECK(rel_err(gen_exp_integral(7, 2.25).value, 0.012347767098521356717) < 1e-12);
    CHECK(rel_err(gen_exp_integral(2, 14.0).value, 5.2340363543242387965e-8) < 1e-12);

    for (int n : {-3, -1, 0, 1, 2, 6}) {
        for (double x : {0.15, 0.8, 1.9, 6.0}) {
            CHECK(rel_err(gen_exp_integral(n, x).value, exp_integral_oracle(n, x)) < 1e-10);
        }
    }
    CHECK_THROWS_AS(gen_exp_integral(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gen_exp_integral(2, -1.0), std::invalid_argument);
}

TEST_CASE("exponential integral recurrence n E_{n+1} = e^{-x} - x E_n") {
    for (double x : {0.05, 0.4, 1.0, 3.5, 12.0}) {
        const double emx = std::exp(-x);
        for (int n = 0; n <= 10; ++n) {
            const double lhs = n * gen_exp_integral(n + 1, x).value;
            const double rhs = emx - x * gen_exp_integral(n, x).value;
            if (n == 0)
                CHECK(std::abs(rhs) < 1e-10 * emx);
            else
                CHECK(rel_err(lhs, rhs) < 1e-10);
        }
    }
}

TEST_CASE("error bounds are finite and nonnegative, values finite in-domain") {
    for (int n : {1, 7, 40}) {
        const auto g = gamma_int(n);
        CHECK(g.abs_error >= 0.0);
        CHECK(std::isfinite(g.abs_error));
        CHECK(std::isfinite(g.value));
    }
    for (double x : {0.1, 5.0, 100.0}) {
        const auto b = bessel_k_int(3, x);
        CHECK(b.abs_error >= 0.0);
        CHECK(std::isfinite(b.value));
        const auto e = gen_exp_integral(4, x);
        CHECK(e.abs_error >= 0.0);
        CHECK(std::isfinite(e.value));
        const auto u = upper_incomplete_gamma(6, x);
        CHECK(u.abs_error >= 0.0);
        CHECK(std::isfinite(u.value));
    }
}
