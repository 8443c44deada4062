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

#include "twrelay/outage_exact.hpp"

#include <cmath>
#include <stdexcept>

#include "outage_detail.hpp"
#include "twrelay/specfun.hpp"
#include "twrelay/summation.hpp"

namespace twrelay {

const char* method_name(Method m) {
    switch (m) {
    case Method::exact_general: return "exact-general";
    case Method::exact_exponential: return "exact-exponential";
    case Method::exact_iid: return "exact-iid";
    case Method::asymptotic: return "asymptotic";
    case Method::system_exact: return "system-exact";
    case Method::system_quadrature: return "system-quadrature";
    case Method::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

namespace {

void check_user(int user) {
    if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
}

void check_cci(const Scenario& s) {
    if (s.interference.count() < 1)
        throw std::invalid_argument("user outage requires L >= 1 interferers; for the no-CCI "
                                    "case use the system-outage module or a vanishing INR");
}

// sum_{s=0}^{l} l!/(l-s)! sum_l beta_l (x + 1/inr_l)^{-s-1}
long double interference_sum(const InterferenceProfile& cci, int l, double x) {
    NeumaierSumL acc;
    for (std::size_t i = 0; i < cci.mean_inr.size(); ++i) {
        const long double r = 1.0L / (x + 1.0L / cci.mean_inr[i]);
        long double falling = 1.0L; // l!/(l-s)!
        long double rp = r;         // r^{s+1}
        for (int s = 0; s <= l; ++s) {
            if (s > 0) {
                falling *= static_cast<long double>(l - s + 1);
                rp *= r;
            }
            acc.add(cci.beta[i] * falling * rp);
        }
    }
    return acc.value();
}

double clamp_probability(double p) { return std::min(1.0, std::max(0.0, p)); }

// One term of the quintuple sum assembled in log space; fallback for the
// extreme order/argument combinations whose direct factors overflow.
double exact_term_by_logs(double theta_a, double theta_b, int j, int k, int l, int t,
                          double chi_a, double chi_b, double snr, double gamma_th, double c,
                          double s_int, double z) {
    const int nu = l + t - k;
    double log_binom = 0.0;
    for (int m = 1; m <= l; ++m) log_binom += std::log((k - l + m) / static_cast<double>(m));
    double log_kfact = 0.0, log_tfact = 0.0;
    for (int m = 2; m <= k; ++m) log_kfact += std::log(static_cast<double>(m));
    for (int m = 2; m <= t - 1; ++m) log_tfact += std::log(static_cast<double>(m));
    const double logmag = std::log(std::abs(theta_a)) + std::log(std::abs(theta_b)) - log_kfact -
                          log_tfact + log_binom + k * std::log(gamma_th / (snr * chi_a)) -
                          gamma_th / (snr * chi_a) + (k - l) * std::log(c) -
                          t * std::log(chi_b * snr) +
                          0.5 * nu * std::log(gamma_th * c * chi_b / chi_a) +
                          specfun::log_bessel_k_int(nu, z);
    const double sgn = ((theta_a < 0) != (theta_b < 0)) ? -1.0 : 1.0;
    return sgn * std::exp(logmag) * static_cast<double>(s_int);
}

// Quintuple sum of the general CDF. outer carries the F-role expansion
// (the CDF argument side), inner the f-role density expansion. The theta
// coefficients alternate in sign and the partial sums cancel massively at
// high SNR, so terms are assembled from direct factor products in
// extended precision with compensated accumulation; the Bessel pair
// enters through its power-scaled form. Terms whose direct factors leave
// binary64 range are recomputed through logarithms.
double eval_exact_general(const SpectralExpansion& outer, const SpectralExpansion& inner,
                          const InterferenceProfile& cci, double snr, double gamma_th, double c) {
    NeumaierSumL acc;
    for (const auto& oc : outer.components) {
        const double chi_a = oc.chi;
        const long double x_a = static_cast<long double>(gamma_th) / (snr * chi_a);
        const long double e_a = std::exp(-x_a);
        for (int j = 1; j <= oc.multiplicity; ++j) {
            const double theta_a = oc.theta[static_cast<std::size_t>(j - 1)];
            if (theta_a == 0.0) continue;
            long double xak_kfact = 1.0L; // x_a^k / k!
            for (int k = 0; k <= j - 1; ++k) {
                if (k > 0) xak_kfact *= x_a / k;
                const long double base_a = theta_a * e_a * xak_kfact;
                long double binom_c = std::pow(static_cast<long double>(c), k); // C(k,l) c^{k-l}
                for (int l = 0; l <= k; ++l) {
                    if (l > 0) binom_c *= static_cast<long double>(k - l + 1) / (l * c);
                    const long double s_int = interference_sum(cci, l, static_cast<double>(x_a));
                    if (s_int == 0.0L) continue;
                    for (const auto& ic : inner.components) {
                        const double chi_b = ic.chi;
                        const double z =
                            2.0 * std::sqrt(gamma_th * c) / (snr * std::sqrt(chi_a * chi_b));
                        // (gamma_th C chi_b/chi_a)^{nu/2} K_nu(z)
                        //   = (snr chi_b)^{nu} (z/2)^{nu} K_nu(z)
                        const long double snr_chib = static_cast<long double>(snr) * chi_b;
                        long double tfact_norm = 1.0L; // 1/(Gamma(t) (chi_b snr)^t)
                        for (int t = 1; t <= ic.multiplicity; ++t) {
                            tfact_norm = (t == 1) ? 1.0L / snr_chib
                                                  : tfact_norm / (snr_chib * (t - 1));
                            const double theta_b = ic.theta[static_cast<std::size_t>(t - 1)];
                            if (std::abs(theta_a * theta_b) < 1e-300) continue;
                            const int nu = l + t - k;
                            const long double pair =
                                std::pow(snr_chib, nu) * specfun::bessel_k_power_scaled(nu, z);
                            const long double term =
                                base_a * binom_c * theta_b * tfact_norm * pair * s_int;
                            if (std::isfinite(static_cast<double>(term))) {
                                acc.add(term);
                            } else {
                                acc.add(exact_term_by_logs(theta_a, theta_b, j, k, l, t, chi_a,
                                                           chi_b, snr, gamma_th, c,
                                                           static_cast<double>(s_int), z));
                            }
                        }
                    }
                }
            }
        }
    }
    return clamp_probability(static_cast<double>(1.0L - 2.0L * acc.value()));
}

} // namespace

OutageResult user_outage_exact(const Scenario& s, int user) {
    return detail::user_outage_exact_with_c(s, user, gain_constant(s).value);
}

OutageResult detail::user_outage_exact_with_c(const Scenario& s, int user, double c) {
    check_user(user);
    check_cci(s);
    const SpectralExpansion& outer = (user == 2) ? s.expansion1 : s.expansion2;
    const SpectralExpansion& inner = (user == 2) ? s.expansion2 : s.expansion1;
    const double p = eval_exact_general(outer, inner, s.interference, s.mean_snr, s.threshold, c);
    return {p, Method::exact_general};
}

OutageResult user_outage_exponential(const Scenario& s, int user) {
    check_user(user);
    check_cci(s);
    for (const auto* e : {&s.expansion1, &s.expansion2})
        for (const auto& comp : e->components)
            if (comp.multiplicity != 1)
                throw std::invalid_argument("user_outage_exponential: requires all-distinct "
                                            "eigenvalues (exponential correlation)");

    const SpectralExpansion& outer = (user == 2) ? s.expansion1 : s.expansion2;
    const SpectralExpansion& inner = (user == 2) ? s.expansion2 : s.expansion1;
    const double snr = s.mean_snr;
    const double gth = s.threshold;
    const double c = gain_constant(s).value;

    NeumaierSumL acc;
    for (const auto& oc : outer.components) {
        const double x_a = gth / (snr * oc.chi);
        const long double si = interference_sum(s.interference, 0, x_a);
        const long double ea = std::exp(static_cast<long double>(-x_a)) * oc.theta[0] * si;
        for (const auto& ic : inner.components) {
            const double z = 2.0 * std::sqrt(gth * c / (snr * snr * oc.chi * ic.chi));
            const double k1 = specfun::bessel_k_int(1, z).value;
            acc.add(ea * (ic.theta[0] / (ic.chi * snr)) *
                    std::sqrt(gth * c * ic.chi / oc.chi) * k1);
        }
    }
    return {clamp_probability(static_cast<double>(1.0L - 2.0L * acc.value())),
            Method::exact_exponential};
}

OutageResult user_outage_iid(const Scenario& s, int user) {
    check_user(user);
    check_cci(s);
    if (s.expansion1.components.size() != 1 ||
        s.expansion1.components[0].multiplicity != s.node1.antennas ||
        s.expansion2.components.size() != 1 ||
        s.expansion2.components[0].multiplicity != s.node2.antennas)
        throw std::invalid_argument("user_outage_iid: requires identity correlation at both nodes");

    const int n_out = (user == 2) ? s.node1.antennas : s.node2.antennas;
    const int n_in = (user == 2) ? s.node2.antennas : s.node1.antennas;
    const double om_out = (user == 2) ? s.omega1 : s.omega2;
    const double om_in = (user == 2) ? s.omega2 : s.omega1;
    const double snr = s.mean_snr;
    const double gth = s.threshold;
    const double c = gain_constant(s).value;

    const double x_a = gth / (snr * om_out);
    const long double e_a = std::exp(static_cast<long double>(-x_a));
    const double z = 2.0 * std::sqrt(gth * c / (snr * snr * om_out * om_in));
    const long double inner_norm =
        static_cast<long double>(specfun::gamma_int(n_in).value) *
        std::pow(static_cast<long double>(snr) * om_in, n_in);

    NeumaierSumL acc;
    long double ifact = 1.0L;
    long double xi = 1.0L; // x_a^i
    for (int i = 0; i <= n_out - 1; ++i) {
        if (i > 0) {
            ifact *= i;
            xi *= x_a;
        }
        long double binom = 1.0L;
        for (int l = 0; l <= i; ++l) {
            if (l > 0) binom *= static_cast<long double>(i - l + 1) / l;
            const int nu = n_in + l - i;
            const long double pair = std::pow(gth * c * om_in / om_out, 0.5L * nu) *
                                     specfun::bessel_k_int(nu, z).value;
            const long double si = interference_sum(s.interference, l, x_a);
            acc.add((e_a * xi / ifact) * binom * std::pow(static_cast<long double>(c), i - l) *
                    pair * si / inner_norm);
        }
    }
    return {clamp_probability(static_cast<double>(1.0L - 2.0L * acc.value())), Method::exact_iid};
}

} // namespace twrelay
