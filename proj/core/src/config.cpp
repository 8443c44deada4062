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

#include "twrelay/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twrelay {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& v, int line) {
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config line " + std::to_string(line) + ": bad number '" + v + "'");
    }
    if (pos != v.size())
        throw std::invalid_argument("config line " + std::to_string(line) + ": bad number '" + v + "'");
    return d;
}

std::vector<double> to_doubles(const std::string& v, int line) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(to_double(item, line));
    return out;
}

std::uint64_t to_u64(const std::string& v, int line) {
    const double d = to_double(v, line);
    if (d < 0 || d != std::floor(d))
        throw std::invalid_argument("config line " + std::to_string(line) +
                                    ": expected a nonnegative integer, got '" + v + "'");
    return static_cast<std::uint64_t>(d);
}

} // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string raw;
    int line = 0;
    bool saw_omega1 = false, saw_omega2 = false;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line) +
                                        ": expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (value.empty())
            throw std::invalid_argument("config line " + std::to_string(line) + ": empty value for '" +
                                        key + "'");

        if (key == "n1") cfg.n1 = static_cast<int>(to_u64(value, line));
        else if (key == "n2") cfg.n2 = static_cast<int>(to_u64(value, line));
        else if (key == "corr1") cfg.corr1 = value;
        else if (key == "corr2") cfg.corr2 = value;
        else if (key == "rho1") cfg.rho1 = to_double(value, line);
        else if (key == "rho2") cfg.rho2 = to_double(value, line);
        else if (key == "rho") { cfg.rho1 = cfg.rho2 = to_double(value, line); }
        else if (key == "snr_db") cfg.snr_db = to_double(value, line);
        else if (key == "gamma_th_db") cfg.gamma_th_db = to_double(value, line);
        else if (key == "omega0_db") cfg.omega0_db = to_double(value, line);
        else if (key == "kappa") cfg.kappa = to_double(value, line);
        else if (key == "mu") cfg.mu = to_double(value, line);
        else if (key == "omega1_db") { cfg.omega1_db = to_double(value, line); saw_omega1 = true; }
        else if (key == "omega2_db") { cfg.omega2_db = to_double(value, line); saw_omega2 = true; }
        else if (key == "inr_db") cfg.inr_db = to_doubles(value, line);
        else if (key == "inr_ratio") cfg.inr_ratio = to_doubles(value, line);
        else if (key == "trials") cfg.trials = to_u64(value, line);
        else if (key == "seed") cfg.seed = to_u64(value, line);
        else if (key == "user") cfg.user = value;
        else if (key == "variable") cfg.variable = value;
        else if (key == "start") cfg.start = to_double(value, line);
        else if (key == "stop") cfg.stop = to_double(value, line);
        else if (key == "step") cfg.step = to_double(value, line);
        else if (key == "methods") cfg.methods = split_list(value);
        else
            throw std::invalid_argument("config line " + std::to_string(line) + ": unknown key '" +
                                        key + "'");
    }
    if (saw_omega1 != saw_omega2)
        throw std::invalid_argument("config: omega1_db and omega2_db must be given together");
    if (!cfg.inr_db.empty() && !cfg.inr_ratio.empty())
        throw std::invalid_argument("config: inr_db and inr_ratio are mutually exclusive");
    for (const auto& m : cfg.methods)
        if (m != "exact" && m != "asymptotic" && m != "mc" && m != "system")
            throw std::invalid_argument("config: unknown method '" + m + "'");
    if (cfg.user != "1" && cfg.user != "2" && cfg.user != "both")
        throw std::invalid_argument("config: user must be 1, 2 or both");
    for (const auto& c : {cfg.corr1, cfg.corr2})
        if (c != "identity" && c != "exponential")
            throw std::invalid_argument("config: correlation must be identity or exponential");
    if (!cfg.variable.empty() && cfg.variable != "snr_db" && cfg.variable != "kappa" &&
        cfg.variable != "rho" && cfg.variable != "gamma_th_db")
        throw std::invalid_argument("config: sweep variable must be one of snr_db, kappa, rho, "
                                    "gamma_th_db");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    return parse_config(in);
}

Scenario build_scenario(const RunConfig& config, const std::string& override_variable,
                        double override_value) {
    double snr_db = config.snr_db;
    double gamma_th_db = config.gamma_th_db;
    double kappa = config.kappa;
    double rho1 = config.rho1, rho2 = config.rho2;
    if (!override_variable.empty()) {
        if (override_variable == "snr_db") snr_db = override_value;
        else if (override_variable == "gamma_th_db") gamma_th_db = override_value;
        else if (override_variable == "kappa") kappa = override_value;
        else if (override_variable == "rho") rho1 = rho2 = override_value;
        else throw std::invalid_argument("build_scenario: unknown override '" + override_variable + "'");
    }

    const auto make_corr = [](const std::string& kind, int n, double rho) {
        if (kind == "identity") return CorrelationModel::identity(n);
        return CorrelationModel::exponential(n, rho);
    };
    const NodeSpec node1{config.n1, make_corr(config.corr1, config.n1, rho1)};
    const NodeSpec node2{config.n2, make_corr(config.corr2, config.n2, rho2)};

    double omega1, omega2;
    if (config.omega1_db) {
        omega1 = db_to_linear(*config.omega1_db);
        omega2 = db_to_linear(*config.omega2_db);
    } else {
        std::tie(omega1, omega2) =
            scenario_channel_powers(db_to_linear(config.omega0_db), kappa, config.mu);
    }

    const double snr = db_to_linear(snr_db);
    InterferenceProfile cci;
    if (!config.inr_ratio.empty()) {
        std::vector<double> inrs;
        inrs.reserve(config.inr_ratio.size());
        for (double r : config.inr_ratio) inrs.push_back(r * snr);
        cci = InterferenceProfile::from_inrs(std::move(inrs), /*proportional_to_snr=*/true);
    } else if (!config.inr_db.empty()) {
        std::vector<double> inrs;
        inrs.reserve(config.inr_db.size());
        for (double db : config.inr_db) inrs.push_back(db_to_linear(db));
        cci = InterferenceProfile::from_inrs(std::move(inrs));
    } else {
        cci = InterferenceProfile::none();
    }

    return make_scenario(node1, node2, snr, db_to_linear(gamma_th_db), omega1, omega2,
                         std::move(cci));
}

} // namespace twrelay
