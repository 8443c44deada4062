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

#ifndef TWRELAY_OUTAGE_SYSTEM_HPP
#define TWRELAY_OUTAGE_SYSTEM_HPP

#include <vector>

#include "twrelay/outage_exact.hpp"

namespace twrelay {

// Truncation control for the infinite s-sum of the system outage closed
// form. Five terms already reach ~1e-8 absolute on typical scenarios.
struct SeriesControl {
    int max_terms = 50;
    double rel_tol = 1e-12;
};

// Positive root of gamma^2 - gamma_th*gamma - gamma_th*C = 0; the
// crossover between the two integration regions of the min-SINR split.
double epsilon_root(double gamma_th, double c);

struct SystemOutageParts {
    double i1; // Pr(S1 in outage and SINR_1 < SINR_2)
    double i2;
    bool rerouted; // alternating-series safeguard fell back to quadrature
};

// System outage Pr(min SINR < gamma_th) without CCI (requires L = 0).
// When the alternating series fails to converge the evaluation reroutes
// to adaptive quadrature and the result is tagged system_quadrature.
OutageResult system_outage_exact(const Scenario& scenario, const SeriesControl& series = {});

SystemOutageParts system_outage_parts(const Scenario& scenario, const SeriesControl& series = {});

// Signed aggregate contribution of each s-index of the I_1 inner sum, for
// truncation diagnostics.
std::vector<double> series_convergence_report(const Scenario& scenario, int s_count);

} // namespace twrelay

#endif
