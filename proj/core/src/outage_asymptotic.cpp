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

#include "twrelay/outage_asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "outage_detail.hpp"
#include "twrelay/specfun.hpp"
#include "twrelay/summation.hpp"

namespace twrelay {

namespace {

double factorial(int n) { return specfun::gamma_int(n + 1).value; }
double psi(int n) { return specfun::digamma_int(n).value; }

// Phi(l,t,k) split as a + b*Lambda, Lambda = ln(rho*gamma_th/(snr chi1 chi2)).
// These are the gamma_th^theta coefficients obtained by pushing the
// ascending K_nu series through one term of the exact CDF; the three
// branches cover nu = l+t-k positive, zero, negative.
struct PhiParts {
    double a = 0.0;
    double b = 0.0;
};

PhiParts phi_parts(int l, int t, int k, double rho, double chi2, int theta) {
    PhiParts out;
    const int nu = l + t - k;
    if (nu > 0) {
        const int w1max = std::min(nu - 1, theta - k);
        for (int w = 0; w <= w1max; ++w) {
            const double sgn = ((theta - k + 1) % 2 == 0) ? 1.0 : -1.0;
            out.a += sgn * factorial(nu - w - 1) / (factorial(w) * factorial(theta - k - w)) *
                     std::pow(rho / chi2, k - l + w);
        }
        const int w2max = theta - l - t;
        for (int w = 0; w <= w2max; ++w) {
            const double sgn = ((theta - k - w) % 2 == 0) ? 1.0 : -1.0;
            const double c = sgn /
                             (factorial(theta - l - t - w) * factorial(w) * factorial(nu + w)) *
                             std::pow(rho / chi2, t + w);
            out.b += c;
            out.a += c * (-psi(w + 1) - psi(nu + w + 1));
        }
    } else if (nu == 0) {
        for (int w = 0; w <= theta - k; ++w) {
            const double sgn = ((theta - k - w) % 2 == 0) ? 1.0 : -1.0;
            const double c = sgn * std::pow(rho / chi2, t + w) /
                             (factorial(w) * factorial(w) * factorial(theta - k - w));
            out.b += c;
            out.a += c * (-2.0 * psi(w + 1));
        }
    } else {
        const int m = -nu;
        const int w1max = std::min(m - 1, theta - l - t);
        for (int w = 0; w <= w1max; ++w) {
            const double sgn = ((theta - l - t + 1) % 2 == 0) ? 1.0 : -1.0;
            out.a += sgn * factorial(m - w - 1) / (factorial(w) * factorial(theta - l - t - w)) *
                     std::pow(rho / chi2, t + w);
        }
        for (int w = 0; w <= theta - k; ++w) {
            const double sgn = ((theta - l - t - w) % 2 == 0) ? 1.0 : -1.0;
            const double c = sgn /
                             (factorial(w) * factorial(m + w) * factorial(theta - k - w)) *
                             std::pow(rho / chi2, k - l + w);
            out.b += c;
            out.a += c * (-psi(w + 1) - psi(m + w + 1));
        }
    }
    return out;
}

// sum_{s<=l} l!/(l-s)! sum_l beta_l inr_l^{s+1} (the fixed-INR limit of the
// interference factor).
double interference_limit_sum(const InterferenceProfile& cci, int l) {
    NeumaierSum acc;
    for (std::size_t i = 0; i < cci.mean_inr.size(); ++i) {
        double falling = 1.0;
        double gp = cci.mean_inr[i];
        for (int s = 0; s <= l; ++s) {
            if (s > 0) {
                falling *= static_cast<double>(l - s + 1);
                gp *= cci.mean_inr[i];
            }
            acc.add(cci.beta[i] * falling * gp);
        }
    }
    return acc.value();
}

bool all_multiplicity_one(const SpectralExpansion& e) {
    return std::all_of(e.components.begin(), e.components.end(),
                       [](const SpectralExpansion::Component& c) { return c.multiplicity == 1; });
}

void check_asymptotic_domain(const Scenario& s, int user) {
    if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
    if (s.interference.count() < 1)
        throw std::invalid_argument("asymptotic_outage: requires L >= 1 interferers");
    if (s.interference.proportional_to_snr)
        throw std::invalid_argument("asymptotic_outage: INRs proportional to the SNR give zero "
                                    "diversity order; the expansion is invalid in that regime");
}

} // namespace

double phi_term(int l, int t, int k, double rho_asym, double chi1, double chi2,
                double gamma_th, double snr, int theta) {
    if (l < 0 || t < 1 || k < 0)
        throw std::invalid_argument("phi_term: indices out of range");
    const PhiParts parts = phi_parts(l, t, k, rho_asym, chi2, theta);
    const double lambda = std::log(rho_asym * gamma_th / (snr * chi1 * chi2));
    return parts.a + parts.b * lambda;
}

AsymptoticExpansion detail::asymptotic_outage_general(const Scenario& s, int user) {
    check_asymptotic_domain(s, user);
    const SpectralExpansion& outer = (user == 2) ? s.expansion1 : s.expansion2;
    const SpectralExpansion& inner = (user == 2) ? s.expansion2 : s.expansion1;
    const int theta = std::min(s.node1.antennas, s.node2.antennas);
    const double rho = gain_constant(s).rho_asym;

    NeumaierSum base, slope;
    for (const auto& oc : outer.components) {
        const double chi_a = oc.chi;
        const double chi_a_mtheta = std::pow(chi_a, -theta);
        for (int j = 1; j <= oc.multiplicity; ++j) {
            const double theta_a = oc.theta[static_cast<std::size_t>(j - 1)];
            if (theta_a == 0.0) continue;
            for (int k = 0; k <= j - 1; ++k) {
                for (int l = 0; l <= k; ++l) {
                    // theta_a/k! * C(k,l) = theta_a/(l!(k-l)!)
                    const double wkl = theta_a / (factorial(l) * factorial(k - l)) *
                                       interference_limit_sum(s.interference, l) * chi_a_mtheta;
                    for (const auto& ic : inner.components) {
                        const double lambda0 = std::log(rho * s.threshold / (chi_a * ic.chi));
                        for (int t = 1; t <= ic.multiplicity; ++t) {
                            const double theta_b = ic.theta[static_cast<std::size_t>(t - 1)];
                            if (theta_b == 0.0) continue;
                            const PhiParts parts = phi_parts(l, t, k, rho, ic.chi, theta);
                            const double w = wkl * theta_b / factorial(t - 1);
                            base.add(w * (parts.a + parts.b * lambda0));
                            slope.add(-w * parts.b);
                        }
                    }
                }
            }
        }
    }
    return {theta, s.threshold, base.value(), slope.value()};
}

AsymptoticExpansion detail::asymptotic_outage_exponential(const Scenario& s, int user) {
    check_asymptotic_domain(s, user);
    const SpectralExpansion& outer = (user == 2) ? s.expansion1 : s.expansion2;
    const SpectralExpansion& inner = (user == 2) ? s.expansion2 : s.expansion1;
    if (!all_multiplicity_one(outer) || !all_multiplicity_one(inner))
        throw std::invalid_argument("asymptotic exponential path requires all-distinct eigenvalues");
    const int theta = std::min(s.node1.antennas, s.node2.antennas);
    const double rho = gain_constant(s).rho_asym;
    const double s0 = interference_limit_sum(s.interference, 0);

    // The quintuple sum collapses to (i, r) with Phi_1 = Phi(0,1,0).
    NeumaierSum base, slope;
    for (const auto& oc : outer.components) {
        const double wa = oc.theta[0] * s0 * std::pow(oc.chi, -theta);
        for (const auto& ic : inner.components) {
            double phi_a = ((theta + 1) % 2 == 0 ? 1.0 : -1.0) / factorial(theta);
            double phi_b = 0.0;
            for (int w = 0; w <= theta - 1; ++w) {
                const double sgn = ((theta - w) % 2 == 0) ? 1.0 : -1.0;
                const double c = sgn * std::pow(rho / ic.chi, w + 1) /
                                 (factorial(w) * factorial(w + 1) * factorial(theta - 1 - w));
                phi_b += c;
                phi_a += c * (-psi(w + 1) - psi(w + 2));
            }
            const double w_ir = wa * ic.theta[0];
            const double lambda0 = std::log(rho * s.threshold / (oc.chi * ic.chi));
            base.add(w_ir * (phi_a + phi_b * lambda0));
            slope.add(-w_ir * phi_b);
        }
    }
    return {theta, s.threshold, base.value(), slope.value()};
}

AsymptoticExpansion asymptotic_outage(const Scenario& s, int user) {
    check_asymptotic_domain(s, user);
    if (all_multiplicity_one(s.expansion1) && all_multiplicity_one(s.expansion2))
        return detail::asymptotic_outage_exponential(s, user);
    return detail::asymptotic_outage_general(s, user);
}

} // namespace twrelay
