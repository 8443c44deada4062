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

#ifndef TWRELAY_MODEL_HPP
#define TWRELAY_MODEL_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "twrelay/spectral.hpp"

namespace twrelay {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Partial-fraction coefficients of the hypoexponential interference sum:
// beta_l = inr_l^{-1} prod_{k!=l} (1 - inr_k/inr_l)^{-1}. Mean INRs must be
// positive and pairwise distinct (relative gap >= 1e-6).
std::vector<double> beta_coefficients(const std::vector<double>& mean_inr);

// Aggregate co-channel interference at the relay: L mean INRs (linear) and
// their partial-fraction coefficients. L = 0 means no CCI (gamma_3 == 0).
// proportional_to_snr marks profiles built as inr = nu * snr; the
// high-SNR asymptotics are invalid in that regime.
struct InterferenceProfile {
    std::vector<double> mean_inr;
    std::vector<double> beta;
    bool proportional_to_snr = false;

    int count() const { return static_cast<int>(mean_inr.size()); }

    static InterferenceProfile none();
    static InterferenceProfile from_inrs(std::vector<double> mean_inr,
                                         bool proportional_to_snr = false);
};

struct NodeSpec {
    int antennas;
    CorrelationModel correlation;
};

// Full network parameterization, with the per-node spectral expansions
// built on construction. All powers are linear.
struct Scenario {
    NodeSpec node1, node2;
    double mean_snr;    // gamma_bar
    double threshold;   // gamma_th
    double omega1, omega2;
    InterferenceProfile interference;
    SpectralExpansion expansion1, expansion2;
};

// Path-loss split of the reference power over the two hops:
// omega1 = kappa^{-mu} omega0, omega2 = (1-kappa)^{-mu} omega0.
std::pair<double, double> scenario_channel_powers(double omega0, double kappa, double mu);

Scenario make_scenario(const NodeSpec& node1, const NodeSpec& node2, double mean_snr,
                       double threshold, double omega1, double omega2,
                       InterferenceProfile interference);

// Fixed-gain constant C = P_s/(N_0 G^2) and its high-SNR slope
// rho_asym = N1*Omega1 + N2*Omega2 (C ~ rho_asym * snr).
struct GainConstant {
    double value;
    double rho_asym;
};

GainConstant gain_constant(const Scenario& scenario);

// Gain constant with the interferer term of the relay power budget
// removed; the system outage closed form assumes no CCI.
GainConstant gain_constant_no_cci(const Scenario& scenario);

} // namespace twrelay

#endif
