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

#include "twrelay/model.hpp"

#include <cmath>
#include <stdexcept>

#include "twrelay/summation.hpp"

namespace twrelay {

std::vector<double> beta_coefficients(const std::vector<double>& mean_inr) {
    const std::size_t l = mean_inr.size();
    for (double g : mean_inr)
        if (!(g > 0.0)) throw std::invalid_argument("beta_coefficients: mean INRs must be positive");
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = a + 1; b < l; ++b)
            if (std::abs(mean_inr[a] - mean_inr[b]) < 1e-6 * std::max(mean_inr[a], mean_inr[b]))
                throw std::invalid_argument(
                    "beta_coefficients: near-coincident INRs (relative gap < 1e-6); "
                    "merge the interferers or perturb the INRs");

    std::vector<double> beta(l);
    for (std::size_t i = 0; i < l; ++i) {
        double prod = 1.0 / mean_inr[i];
        for (std::size_t k = 0; k < l; ++k) {
            if (k == i) continue;
            prod /= 1.0 - mean_inr[k] / mean_inr[i];
        }
        beta[i] = prod;
    }
    return beta;
}

InterferenceProfile InterferenceProfile::none() { return {{}, {}, false}; }

InterferenceProfile InterferenceProfile::from_inrs(std::vector<double> mean_inr,
                                                   bool proportional_to_snr) {
    InterferenceProfile p;
    p.beta = beta_coefficients(mean_inr);
    p.mean_inr = std::move(mean_inr);
    p.proportional_to_snr = proportional_to_snr;
    return p;
}

std::pair<double, double> scenario_channel_powers(double omega0, double kappa, double mu) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("scenario_channel_powers: omega0 must be positive");
    if (!(kappa > 0.0 && kappa < 1.0))
        throw std::invalid_argument("scenario_channel_powers: kappa must lie in (0, 1)");
    if (!(mu >= 0.0)) throw std::invalid_argument("scenario_channel_powers: mu must be nonnegative");
    return {std::pow(kappa, -mu) * omega0, std::pow(1.0 - kappa, -mu) * omega0};
}

Scenario make_scenario(const NodeSpec& node1, const NodeSpec& node2, double mean_snr,
                       double threshold, double omega1, double omega2,
                       InterferenceProfile interference) {
    if (node1.antennas != node1.correlation.size || node2.antennas != node2.correlation.size)
        throw std::invalid_argument("make_scenario: antenna count must match the correlation size");
    if (!(mean_snr > 0.0)) throw std::invalid_argument("make_scenario: mean SNR must be positive");
    if (!(threshold > 0.0)) throw std::invalid_argument("make_scenario: threshold must be positive");
    if (!(omega1 > 0.0 && omega2 > 0.0))
        throw std::invalid_argument("make_scenario: channel powers must be positive");

    Scenario s;
    s.node1 = node1;
    s.node2 = node2;
    s.mean_snr = mean_snr;
    s.threshold = threshold;
    s.omega1 = omega1;
    s.omega2 = omega2;
    s.interference = std::move(interference);
    s.expansion1 = expansion_coefficients(eigen_spectrum(node1.correlation), omega1);
    s.expansion2 = expansion_coefficients(eigen_spectrum(node2.correlation), omega2);
    return s;
}

namespace {

GainConstant gain_constant_impl(const Scenario& s, bool with_cci) {
    NeumaierSum c;
    for (const auto& comp : s.expansion1.components)
        for (int j = 1; j <= comp.multiplicity; ++j)
            c.add(s.mean_snr * comp.theta[static_cast<std::size_t>(j - 1)] * j * comp.chi);
    for (const auto& comp : s.expansion2.components)
        for (int j = 1; j <= comp.multiplicity; ++j)
            c.add(s.mean_snr * comp.theta[static_cast<std::size_t>(j - 1)] * j * comp.chi);
    if (with_cci)
        for (double g : s.interference.mean_inr) c.add(g);
    c.add(1.0);
    const double rho = s.node1.antennas * s.omega1 + s.node2.antennas * s.omega2;
    return {c.value(), rho};
}

} // namespace

GainConstant gain_constant(const Scenario& scenario) { return gain_constant_impl(scenario, true); }

GainConstant gain_constant_no_cci(const Scenario& scenario) {
    return gain_constant_impl(scenario, false);
}

} // namespace twrelay
