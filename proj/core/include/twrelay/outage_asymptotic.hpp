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

#ifndef TWRELAY_OUTAGE_ASYMPTOTIC_HPP
#define TWRELAY_OUTAGE_ASYMPTOTIC_HPP

#include "twrelay/model.hpp"

namespace twrelay {

// High-SNR outage expansion p ~ c_theta(snr) * (gamma_th/snr)^theta with
// theta = min(N1, N2). The coefficient keeps its log(snr) dependence, so
// it is affine in ln(snr).
struct AsymptoticExpansion {
    int diversity_order;
    double gamma_th;
    double c_base;
    double c_log_snr;

    double coefficient(double snr) const { return c_base + c_log_snr * std::log(snr); }
    double evaluate(double snr) const {
        return coefficient(snr) * std::pow(gamma_th / snr, diversity_order);
    }
};

// One Phi term of the leading-coefficient sum; dispatches on the sign of
// l + t - k. Log arguments are evaluated at rho_asym*gamma_th/(snr*chi1*chi2).
double phi_term(int l, int t, int k, double rho_asym, double chi1, double chi2,
                double gamma_th, double snr, int theta);

// Builds the expansion for one user. Requires full-rank correlation,
// L >= 1 fixed INRs; rejects interference profiles proportional to the
// SNR (zero diversity order, the expansion is invalid there).
AsymptoticExpansion asymptotic_outage(const Scenario& scenario, int user);

} // namespace twrelay

#endif
