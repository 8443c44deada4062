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

#include "twrelay/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "outage_detail.hpp"
#include "twrelay/outage_asymptotic.hpp"
#include "twrelay/simulate.hpp"

namespace twrelay {

namespace {

// INR used to evaluate the user closed forms on no-CCI configurations
// (the vanishing-interference limit of the L >= 1 formulas).
constexpr double vanishing_inr = 1e-12;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<int> users_of(const RunConfig& cfg) {
    if (cfg.user == "1") return {1};
    if (cfg.user == "2") return {2};
    return {1, 2};
}

bool has_method(const RunConfig& cfg, const std::string& m) {
    return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

Scenario user_formula_scenario(const Scenario& point) {
    if (point.interference.count() > 0) return point;
    Scenario s = point;
    s.interference = InterferenceProfile::from_inrs({vanishing_inr});
    return s;
}

struct Row {
    double value;
    std::string label;
    std::string p, stderr_s, trials_s, seed_s;
};

struct ResolvedOptions {
    std::uint64_t trials;
    std::uint64_t seed;
    SeriesControl series;
    int workers;
    double gain_scale;
};

ResolvedOptions resolve(const RunConfig& cfg, const RunOptions& opt) {
    ResolvedOptions r;
    r.trials = opt.trials ? opt.trials : cfg.trials;
    r.seed = opt.seed ? opt.seed : cfg.seed;
    r.series = SeriesControl{};
    if (opt.max_series_terms > 0) r.series.max_terms = opt.max_series_terms;
    r.workers = std::max(1, opt.workers);
    r.gain_scale = opt.gain_scale_hook;
    return r;
}

std::vector<Row> evaluate_point(const RunConfig& cfg, const std::string& variable, double value,
                                const ResolvedOptions& opt) {
    const Scenario point = build_scenario(cfg, variable, value);
    std::vector<Row> rows;
    const auto add_closed = [&](const std::string& label, double p) {
        rows.push_back({value, label, fmt12(p), "", "", ""});
    };
    const auto add_mc = [&](const std::string& label, const McEstimate& e) {
        rows.push_back({value, label, fmt12(e.p_hat), fmt12(e.std_error),
                        std::to_string(e.trials), std::to_string(e.seed)});
    };

    for (int u : users_of(cfg)) {
        const std::string su = "-u" + std::to_string(u);
        if (has_method(cfg, "exact")) {
            const Scenario uscn = user_formula_scenario(point);
            add_closed("exact" + su, user_outage_exact(uscn, u).p);
        }
        if (has_method(cfg, "asymptotic")) {
            const Scenario uscn = user_formula_scenario(point);
            add_closed("asymptotic" + su, asymptotic_outage(uscn, u).evaluate(uscn.mean_snr));
        }
        if (has_method(cfg, "mc"))
            add_mc("mc" + su, estimate_user_outage(point, u, opt.trials, opt.seed));
    }
    if (has_method(cfg, "system")) {
        const OutageResult r = system_outage_exact(point, opt.series);
        add_closed(r.method == Method::system_quadrature ? "system-quadrature" : "system", r.p);
        if (has_method(cfg, "mc"))
            add_mc("mc-system", estimate_system_outage(point, opt.trials, opt.seed));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.label < b.label; });
    return rows;
}

} // namespace

SweepSpec sweep_spec_from_config(const RunConfig& cfg) {
    if (cfg.variable.empty())
        throw std::invalid_argument("sweep: the config does not define a sweep variable");
    if (cfg.methods.empty()) throw std::invalid_argument("sweep: at least one method is required");
    if (!(cfg.start < cfg.stop)) throw std::invalid_argument("sweep: requires start < stop");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("sweep: requires step > 0");
    if (!cfg.inr_ratio.empty() && has_method(cfg, "asymptotic"))
        throw std::invalid_argument("sweep: asymptotic method is invalid with inr_ratio "
                                    "(INRs proportional to the SNR)");
    return {cfg.variable, cfg.start, cfg.stop, cfg.step, cfg.methods};
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = spec.start + i * spec.step;
        if (v > spec.stop + 0.5 * spec.step) break;
        grid.push_back(std::min(v, spec.stop));
    }
    return grid;
}

std::string run_sweep_csv(const RunConfig& cfg, const RunOptions& options) {
    const SweepSpec spec = sweep_spec_from_config(cfg);
    const std::vector<double> grid = sweep_grid(spec);
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    const ResolvedOptions opt = resolve(cfg, options);

    std::vector<std::vector<Row>> results(grid.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                results[i] = evaluate_point(cfg, spec.variable, grid[i], opt);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (opt.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < opt.workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::ostringstream out;
    out << "variable,value,method,p,stderr,trials,seed\n";
    for (const auto& rows : results)
        for (const auto& r : rows)
            out << spec.variable << ',' << fmt12(r.value) << ',' << r.label << ',' << r.p << ','
                << r.stderr_s << ',' << r.trials_s << ',' << r.seed_s << '\n';
    return out.str();
}

void run_sweep(const RunConfig& cfg, const std::string& out_path, const RunOptions& options) {
    const std::string csv = run_sweep_csv(cfg, options);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("sweep: cannot open output file '" + out_path + "'");
    out << csv;
    if (!out) throw std::runtime_error("sweep: failed writing '" + out_path + "'");
}

ValidateReport validate_run(const RunConfig& cfg, const RunOptions& options) {
    const ResolvedOptions opt = resolve(cfg, options);
    std::vector<std::pair<std::string, double>> points;
    if (cfg.variable.empty()) {
        points.emplace_back("", 0.0);
    } else {
        const SweepSpec spec = sweep_spec_from_config(cfg);
        for (double v : sweep_grid(spec)) points.emplace_back(spec.variable, v);
    }

    ValidateReport report{true, 0, 0, {}};
    std::ostringstream table;
    const auto gate = [&](const std::string& where, const std::string& what, double closed,
                          const McEstimate& mc) {
        ++report.checked;
        bool ok;
        std::string detail;
        if (mc.p_hat == 0.0) {
            ok = closed <= mc.std_error; // one-sided 95% bound 3/trials
            detail = "p=" + fmt12(closed) + " mc=0 bound=" + fmt12(mc.std_error);
        } else {
            const double diff = std::abs(closed - mc.p_hat);
            ok = diff <= 3.0 * mc.std_error;
            detail = "p=" + fmt12(closed) + " mc=" + fmt12(mc.p_hat) + " |diff|=" + fmt12(diff) +
                     " 3sigma=" + fmt12(3.0 * mc.std_error);
        }
        if (!ok) {
            ++report.failed;
            report.passed = false;
        }
        table << (ok ? "PASS " : "FAIL ") << where << ' ' << what << ' ' << detail << '\n';
    };

    for (const auto& [variable, value] : points) {
        const Scenario point = build_scenario(cfg, variable, value);
        const std::string where =
            variable.empty() ? std::string("point") : variable + "=" + fmt12(value);
        const bool want_exact = cfg.methods.empty() || has_method(cfg, "exact");
        const bool want_system = (cfg.methods.empty() || has_method(cfg, "system")) &&
                                 point.interference.count() == 0;
        if (want_exact) {
            const Scenario uscn = user_formula_scenario(point);
            for (int u : users_of(cfg)) {
                const double c = gain_constant(uscn).value * opt.gain_scale;
                const double p = detail::user_outage_exact_with_c(uscn, u, c).p;
                gate(where, "exact-u" + std::to_string(u), p,
                     estimate_user_outage(point, u, opt.trials, opt.seed));
            }
        }
        if (want_system)
            gate(where, "system", system_outage_exact(point, opt.series).p,
                 estimate_system_outage(point, opt.trials, opt.seed));
    }
    report.table = table.str();
    return report;
}

} // namespace twrelay
