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

#ifndef TWRELAY_SPECFUN_HPP
#define TWRELAY_SPECFUN_HPP

namespace twrelay::specfun {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Value plus a conservative absolute error bound. The bound is an
// estimate of roundoff accumulated by the evaluation path, not a
// rigorous interval.
struct SpecialValue {
    double value;
    double abs_error;
};

// Gamma(n) = (n-1)! for integer n >= 1. Throws std::invalid_argument for
// n <= 0 and std::overflow_error for n > 171 (factorial exceeds binary64).
SpecialValue gamma_int(int n);

// Upper incomplete gamma Gamma(a, x) for integer a >= 1, x >= 0.
// Evaluated by the finite sum (a-1)! e^{-x} sum_{m<a} x^m/m!.
SpecialValue upper_incomplete_gamma(int a, double x);

// Digamma psi(n) = -euler_gamma + sum_{m=1}^{n-1} 1/m, integer n >= 1.
SpecialValue digamma_int(int n);

// Modified Bessel function of the second kind, integer order.
// Negative orders are folded by K_{-n} = K_n. Requires x > 0 and
// |order| <= max_order. Throws std::overflow_error when the result
// exceeds binary64 range (use log_bessel_k_int there).
SpecialValue bessel_k_int(int order, double x, int max_order = 64);

// ln K_n(x); finite for every |order| <= max_order and x > 0, including
// the regimes where K_n itself over- or underflows.
double log_bessel_k_int(int order, double x, int max_order = 64);

// Power-scaled pair (z/2)^order K_{|order|}(z), evaluated jointly. For
// z <= 2 and order >= 1 the scaled ascending series avoids the huge
// intermediate of the plain product; extended precision keeps the outage
// sums' cancellation intact at high SNR.
long double bessel_k_power_scaled(int order, double z, int max_order = 64);

// Generalized exponential integral Ei_n(x) = int_1^inf e^{-xt} t^{-n} dt
// for x > 0 and any integer order. E_0(x) = e^{-x}/x; negative orders
// n = -m map to Gamma(m+1, x)/x^{m+1}.
SpecialValue gen_exp_integral(int order, double x);

} // namespace twrelay::specfun

#endif
