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

#ifndef TWRELAY_CONFIG_HPP
#define TWRELAY_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twrelay/model.hpp"

namespace twrelay {

// Flat key = value scenario/run description. Powers, thresholds and INRs
// are quoted in dB and converted to linear units on scenario build;
// geometry (kappa, mu) is dimensionless. '#' starts a comment, list
// values are comma-separated.
struct RunConfig {
    int n1 = 1, n2 = 1;
    std::string corr1 = "identity", corr2 = "identity"; // identity | exponential
    double rho1 = 0.0, rho2 = 0.0;

    double snr_db = 20.0;
    double gamma_th_db = 5.0;

    // Geometry: either relay placement (omega0, kappa, mu) or direct powers.
    double omega0_db = 0.0;
    double kappa = 0.5;
    double mu = 4.0;
    std::optional<double> omega1_db, omega2_db;

    std::vector<double> inr_db;    // fixed INRs
    std::vector<double> inr_ratio; // proportional mode: inr = ratio * snr

    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::string user = "2"; // 1 | 2 | both

    // Sweep block; variable empty means single-point configuration.
    std::string variable; // snr_db | kappa | rho | gamma_th_db
    double start = 0.0, stop = 0.0, step = 0.0;
    std::vector<std::string> methods; // exact, asymptotic, mc, system
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

// Builds the scenario at a grid point. `override_variable` (one of the
// sweep variable names) replaces the corresponding config value.
Scenario build_scenario(const RunConfig& config, const std::string& override_variable = {},
                        double override_value = 0.0);

} // namespace twrelay

#endif
