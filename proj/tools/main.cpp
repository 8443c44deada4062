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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <thread>

#include "twrelay/outage_asymptotic.hpp"
#include "twrelay/outage_system.hpp"
#include "twrelay/simulate.hpp"
#include "twrelay/sweep.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int max_series_terms = 0;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_series = true) {
    cmd->add_option("--config", args.config_path, "scenario/run configuration file")->required();
    cmd->add_option("--trials", args.trials, "Monte Carlo trials (overrides the config)");
    cmd->add_option("--seed", args.seed, "Monte Carlo seed (overrides the config)");
    if (with_series)
        cmd->add_option("--max-series-terms", args.max_series_terms,
                        "truncation cap for the system-outage series");
}

twrelay::RunOptions make_options(const CommonArgs& args) {
    twrelay::RunOptions opt;
    opt.trials = args.trials;
    opt.seed = args.seed;
    opt.max_series_terms = args.max_series_terms;
    opt.workers = args.workers > 0 ? args.workers
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return opt;
}

void print_estimate(const char* label, const twrelay::McEstimate& e) {
    std::printf("%-16s %.12g  stderr=%.12g  trials=%llu  seed=%llu\n", label, e.p_hat, e.std_error,
                static_cast<unsigned long long>(e.trials), static_cast<unsigned long long>(e.seed));
}

std::vector<int> users_of(const twrelay::RunConfig& cfg) {
    if (cfg.user == "1") return {1};
    if (cfg.user == "2") return {2};
    return {1, 2};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-way fixed-gain AF relay outage analysis"};
    app.require_subcommand(1);

    CommonArgs sweep_args, validate_args, user_args, system_args;
    std::string out_path;

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep and write a CSV");
    add_common(sweep, sweep_args);
    sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* validate =
        app.add_subcommand("validate", "check every applicable closed form against Monte Carlo");
    add_common(validate, validate_args);

    CLI::App* user_cmd =
        app.add_subcommand("user-outage", "closed-form user outage at the configured point");
    add_common(user_cmd, user_args);

    CLI::App* system_cmd =
        app.add_subcommand("system-outage", "closed-form system outage at the configured point");
    add_common(system_cmd, system_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            const auto cfg = twrelay::parse_config_file(sweep_args.config_path);
            twrelay::run_sweep(cfg, out_path, make_options(sweep_args));
        } else if (validate->parsed()) {
            const auto cfg = twrelay::parse_config_file(validate_args.config_path);
            const auto report = twrelay::validate_run(cfg, make_options(validate_args));
            std::cout << report.table;
            std::cout << (report.passed ? "VALIDATION PASSED" : "VALIDATION FAILED") << " ("
                      << report.checked - report.failed << "/" << report.checked << " checks)\n";
            if (!report.passed) return 1;
        } else if (user_cmd->parsed()) {
            const auto cfg = twrelay::parse_config_file(user_args.config_path);
            const auto opt = make_options(user_args);
            const auto scenario = twrelay::build_scenario(cfg);
            for (int u : users_of(cfg)) {
                char label[32];
                const auto exact = twrelay::user_outage_exact(scenario, u);
                std::snprintf(label, sizeof label, "exact-u%d", u);
                std::printf("%-16s %.12g\n", label, exact.p);
                if (scenario.interference.count() >= 1 &&
                    !scenario.interference.proportional_to_snr) {
                    const auto asym = twrelay::asymptotic_outage(scenario, u);
                    std::snprintf(label, sizeof label, "asymptotic-u%d", u);
                    std::printf("%-16s %.12g  (diversity order %d)\n", label,
                                asym.evaluate(scenario.mean_snr), asym.diversity_order);
                }
                if (opt.trials || cfg.trials) {
                    const auto mc = twrelay::estimate_user_outage(
                        scenario, u, opt.trials ? opt.trials : cfg.trials,
                        opt.seed ? opt.seed : cfg.seed, opt.workers);
                    std::snprintf(label, sizeof label, "mc-u%d", u);
                    print_estimate(label, mc);
                }
            }
        } else if (system_cmd->parsed()) {
            const auto cfg = twrelay::parse_config_file(system_args.config_path);
            const auto opt = make_options(system_args);
            const auto scenario = twrelay::build_scenario(cfg);
            twrelay::SeriesControl series;
            if (opt.max_series_terms > 0) series.max_terms = opt.max_series_terms;
            const auto sys = twrelay::system_outage_exact(scenario, series);
            std::printf("%-16s %.12g\n", twrelay::method_name(sys.method), sys.p);
            const auto mc = twrelay::estimate_system_outage(
                scenario, opt.trials ? opt.trials : cfg.trials, opt.seed ? opt.seed : cfg.seed,
                opt.workers);
            print_estimate("mc-system", mc);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
