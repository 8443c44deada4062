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
//
// Acceptance suite: every check below runs at full scale and prints one
// pass/fail line. Exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twrelay/outage_asymptotic.hpp"
#include "twrelay/outage_exact.hpp"
#include "twrelay/outage_system.hpp"
#include "twrelay/simulate.hpp"
#include "twrelay/specfun.hpp"
#include "twrelay/sweep.hpp"

using namespace twrelay;

namespace {

constexpr std::uint64_t mc_trials = 10000000;
constexpr std::uint64_t mc_seed = 20260809;

int failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

Scenario fig1_scenario(double snr_db, double rho) {
    return make_scenario({3, CorrelationModel::exponential(3, rho)},
                         {2, CorrelationModel::exponential(2, rho)}, db_to_linear(snr_db),
                         db_to_linear(5.0), 16.0, 16.0,
                         InterferenceProfile::from_inrs({db_to_linear(1.0)}));
}

Scenario fig2_scenario(int n1, int n2, double snr_db) {
    return make_scenario({n1, CorrelationModel::exponential(n1, 0.3)},
                         {n2, CorrelationModel::exponential(n2, 0.3)}, db_to_linear(snr_db),
                         db_to_linear(5.0), 16.0, 16.0,
                         InterferenceProfile::from_inrs(
                             {db_to_linear(1.0), db_to_linear(2.0), db_to_linear(3.0)}));
}

Scenario fig3_scenario(double snr_db, double rho, double nu) {
    const double snr = db_to_linear(snr_db);
    return make_scenario({3, CorrelationModel::exponential(3, rho)},
                         {2, CorrelationModel::exponential(2, rho)}, snr, db_to_linear(5.0), 16.0,
                         16.0, InterferenceProfile::from_inrs({nu * snr}, true));
}

Scenario fig4_scenario(int n1, int n2, double kappa, double snr_db) {
    const auto [om1, om2] = scenario_channel_powers(1.0, kappa, 4.0);
    return make_scenario({n1, CorrelationModel::identity(n1)}, {n2, CorrelationModel::identity(n2)},
                         db_to_linear(snr_db), db_to_linear(5.0), om1, om2,
                         InterferenceProfile::none());
}

// --- criterion 1 -------------------------------------------------------
void criterion_1() {
    int checked = 0;
    double worst_z = 0.0;
    bool ok = true;
    for (double rho : {0.2, 0.5, 0.8}) {
        for (double snr_db = 0.0; snr_db <= 40.0; snr_db += 2.0) {
            const Scenario s = fig1_scenario(snr_db, rho);
            const double p = user_outage_exact(s, 2).p;
            if (p < 1e-4) continue;
            const auto mc = estimate_user_outage(s, 2, mc_trials, mc_seed);
            const double z = std::abs(p - mc.p_hat) / mc.std_error;
            worst_z = std::max(worst_z, z);
            ok = ok && (z <= 3.0);
            ++checked;
        }
    }
    std::ostringstream d;
    d << checked << " grid points with p >= 1e-4 at 1e7 trials, worst |z| = " << worst_z;
    report(1, "exact user outage vs Monte Carlo on the Fig. 1 grid", ok && checked >= 30, d.str());
}

// --- criterion 2 -------------------------------------------------------
void criterion_2() {
    CounterStream stream(1881, 0);
    int accepted = 0;
    double worst = 0.0;
    bool ok = true;
    while (accepted < 50) {
        const int n1 = 1 + static_cast<int>(stream.uniform() * 4);
        const int n2 = 1 + static_cast<int>(stream.uniform() * 4);
        const double rho1 = 0.05 + 0.85 * stream.uniform();
        const double rho2 = 0.05 + 0.85 * stream.uniform();
        const double snr_db = 2.0 + 12.0 * stream.uniform();
        const double gth_db = 1.0 + 5.0 * stream.uniform();
        const int l = 1 + static_cast<int>(stream.uniform() * 3);
        std::vector<double> inr;
        for (int i = 0; i < l; ++i)
            inr.push_back(db_to_linear(-2.0 + 6.0 * i + 3.0 * stream.uniform()));
        const double om1 = 1.0 + 24.0 * stream.uniform();
        const double om2 = 1.0 + 24.0 * stream.uniform();
        const int user = stream.uniform() < 0.5 ? 1 : 2;

        const auto s_exp = make_scenario({n1, CorrelationModel::exponential(n1, rho1)},
                                         {n2, CorrelationModel::exponential(n2, rho2)},
                                         db_to_linear(snr_db), db_to_linear(gth_db), om1, om2,
                                         InterferenceProfile::from_inrs(inr));
        const double p_gen = user_outage_exact(s_exp, user).p;
        if (p_gen < 1e-4) continue;
        ++accepted;
        worst = std::max(worst, rel_err(user_outage_exponential(s_exp, user).p, p_gen));

        const auto s_iid = make_scenario({n1, CorrelationModel::identity(n1)},
                                         {n2, CorrelationModel::identity(n2)},
                                         db_to_linear(snr_db), db_to_linear(gth_db), om1, om2,
                                         InterferenceProfile::from_inrs(inr));
        const double p_gen_iid = user_outage_exact(s_iid, user).p;
        if (p_gen_iid >= 1e-4)
            worst = std::max(worst, rel_err(user_outage_iid(s_iid, user).p, p_gen_iid));
        ok = ok && worst < 1e-10;
    }
    std::ostringstream d;
    d << "50 randomized scenarios, worst relative gap = " << worst;
    report(2, "special-case forms agree with the general form to 1e-10", ok, d.str());
}

// --- criterion 3 -------------------------------------------------------
void criterion_3() {
    bool ok = true;
    std::ostringstream d;
    for (const auto& [n1, n2] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
        const int theta = std::min(n1, n2);
        const double p45 = user_outage_exact(fig2_scenario(n1, n2, 45.0), 2).p;
        const double p50 = user_outage_exact(fig2_scenario(n1, n2, 50.0), 2).p;
        const double slope = (std::log(p50) - std::log(p45)) /
                             (std::log(db_to_linear(50.0)) - std::log(db_to_linear(45.0)));
        ok = ok && std::abs(slope + theta) <= 0.05;
        d << "(" << n1 << "," << n2 << ") slope " << slope << "  ";
    }
    report(3, "45-50 dB log-log slope equals -min(N1,N2) within 0.05", ok, d.str());
}

// --- criterion 4 -------------------------------------------------------
void criterion_4() {
    bool ok = true;
    double worst50 = 0.0;
    for (double rho : {0.2, 0.5, 0.8}) {
        double prev = 1e9;
        for (double snr_db = 30.0; snr_db <= 50.0; snr_db += 5.0) {
            const Scenario s = fig1_scenario(snr_db, rho);
            const double exact = user_outage_exact(s, 2).p;
            const double asym = asymptotic_outage(s, 2).evaluate(s.mean_snr);
            const double err = std::abs(asym / exact - 1.0);
            ok = ok && (err < prev);
            prev = err;
            if (snr_db == 50.0) {
                worst50 = std::max(worst50, err);
                ok = ok && err <= 0.10;
            }
        }
    }
    std::ostringstream d;
    d << "worst |p_asym/p_exact - 1| at 50 dB = " << worst50 << ", shrinking from 30 dB";
    report(4, "asymptote converges to the exact curve", ok, d.str());
}

// --- criterion 5 -------------------------------------------------------
void criterion_5() {
    const double snr_db = 30.0;
    bool mc_ok = true, argmin_ok = true;
    int checked = 0;
    double worst_z = 0.0;
    std::ostringstream d;
    for (const auto& [n1, n2, want_lo, want_hi] :
         {std::tuple{2, 2, 0.5, 0.5}, {2, 4, 0.25, 0.35}}) {
        double best_k = 0.0, best_p = 2.0;
        for (double kappa = 0.05; kappa <= 0.951; kappa += 0.05) {
            const Scenario s = fig4_scenario(n1, n2, kappa, snr_db);
            const double p = system_outage_exact(s).p;
            if (p < best_p) {
                best_p = p;
                best_k = kappa;
            }
            const auto mc = estimate_system_outage(s, mc_trials, mc_seed);
            ++checked;
            if (mc.p_hat == 0.0) {
                mc_ok = mc_ok && p <= mc.std_error;
            } else {
                const double z = std::abs(p - mc.p_hat) / mc.std_error;
                worst_z = std::max(worst_z, z);
                mc_ok = mc_ok && z <= 3.0;
            }
        }
        argmin_ok = argmin_ok && best_k >= want_lo - 1e-9 && best_k <= want_hi + 1e-9;
        d << "(" << n1 << "," << n2 << ") argmin kappa = " << best_k << "  ";
    }
    d << checked << " MC points, worst |z| = " << worst_z;
    report(5, "system outage vs Monte Carlo and relay-placement optima", mc_ok && argmin_ok,
           d.str());
}

// --- criterion 6 -------------------------------------------------------
void criterion_6() {
    const Scenario s = fig4_scenario(2, 4, 0.3, 30.0);
    const double p5 = system_outage_exact(s, SeriesControl{5, 1e-30}).p;
    const double p50 = system_outage_exact(s, SeriesControl{50, 1e-30}).p;
    const double diff = std::abs(p5 - p50);
    std::ostringstream d;
    d << "|p(5 terms) - p(50 terms)| = " << diff;
    report(6, "five series terms reach 1e-8 absolute", diff <= 1e-8, d.str());
}

// --- criterion 7 -------------------------------------------------------
void criterion_7() {
    const double p50 = user_outage_exact(fig3_scenario(50.0, 0.8, 0.1), 2).p;
    const double p60 = user_outage_exact(fig3_scenario(60.0, 0.8, 0.1), 2).p;
    const double floor_gap = std::abs(p50 / p60 - 1.0);
    const bool floor_ok = floor_gap <= 0.10;

    const auto mc_corr = estimate_user_outage(fig3_scenario(0.0, 0.8, 0.1), 2, mc_trials, mc_seed);
    const auto mc_iid = estimate_user_outage(fig3_scenario(0.0, 0.0, 0.1), 2, mc_trials, mc_seed);
    const double se = std::hypot(mc_corr.std_error, mc_iid.std_error);
    const bool low_snr_ok = mc_corr.p_hat <= mc_iid.p_hat + 3.0 * se;

    std::ostringstream d;
    d << "floor gap 50->60 dB = " << floor_gap << ", 0 dB p(rho=0.8) = " << mc_corr.p_hat
      << " vs p(rho=0) = " << mc_iid.p_hat;
    report(7, "interference floor and low-SNR correlation benefit", floor_ok && low_snr_ok,
           d.str());
}

// --- criterion 8 -------------------------------------------------------
void criterion_8() {
    bool ok = true;
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (double rho : {0.0, 0.3, 0.6, 0.9}) {
            const auto e =
                expansion_coefficients(eigen_spectrum(CorrelationModel::exponential(n, rho)), 1.0);
            worst = std::max(worst, std::abs(e.theta_sum() - 1.0));
            worst = std::max(worst, rel_err(e.theta_mean(), static_cast<double>(n)));
        }
    }
    ok = worst <= 1e-10;

    const auto e = expansion_coefficients(eigen_spectrum(CorrelationModel::exponential(2, 0.5)), 1.0);
    const double snr = 10.0;
    const std::size_t n_samples = 1000000;
    std::vector<double> samples(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        CounterStream stream(mc_seed, i);
        samples[i] = sample_channel_gain(e, snr, stream);
    }
    const double dstat =
        oracles::ks_statistic(std::move(samples), [&](double g) { return gain_cdf(e, snr, g); });
    const bool ks_ok = dstat < oracles::ks_critical_1pct(n_samples);

    std::ostringstream d;
    d << "worst theta-identity residual = " << worst << ", KS D = " << dstat
      << " (crit " << oracles::ks_critical_1pct(n_samples) << ")";
    report(8, "spectral identities to 1e-10 and sampled gains pass KS at 1%", ok && ks_ok, d.str());
}

// --- criterion 9 -------------------------------------------------------
void criterion_9() {
    using namespace twrelay::specfun;
    bool ok = true;
    double worst = 0.0;
    const auto track = [&](double r) {
        worst = std::max(worst, r);
        ok = ok && r <= 1e-10;
    };

    for (const auto& [a, x] : {std::pair{4, 2.5}, {7, 13.2}, {2, 0.3}, {10, 4.0}}) {
        const double want = oracles::integrate_to_inf(
            [a = a](double t) { return std::pow(t, a - 1) * std::exp(-t); }, x);
        track(rel_err(upper_incomplete_gamma(a, x).value, want));
    }
    for (int nu : {0, 1, 2, 5, 9}) {
        for (double x : {0.05, 0.6, 1.7, 4.2, 11.0}) {
            double upper = 1.0;
            while (x * std::cosh(upper) - nu * upper < x + 120.0) upper += 0.5;
            const double want = oracles::integrate_rel(
                [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); }, 0.0,
                upper);
            track(rel_err(bessel_k_int(nu, x).value, want));
        }
    }
    for (int n : {-2, 0, 1, 3, 6}) {
        for (double x : {0.15, 0.8, 1.9, 6.0}) {
            double upper = 2.0;
            while (x * upper - (n < 0 ? -n : 0) * std::log(upper) < x + 90.0) upper *= 1.5;
            const double want = oracles::integrate_rel(
                [&](double t) { return std::exp(-x * t) * std::pow(t, -n); }, 1.0, upper);
            track(rel_err(gen_exp_integral(n, x).value, want));
        }
    }
    // recurrences
    for (double x : {0.01, 0.1, 1.0, 10.0}) {
        for (int nu = 1; nu <= 20; ++nu) {
            const double lhs = bessel_k_int(nu + 1, x).value;
            const double rhs =
                bessel_k_int(nu - 1, x).value + (2.0 * nu / x) * bessel_k_int(nu, x).value;
            track(rel_err(lhs, rhs));
        }
        const double emx = std::exp(-x);
        for (int n = 1; n <= 10; ++n) {
            track(rel_err(n * gen_exp_integral(n + 1, x).value,
                          emx - x * gen_exp_integral(n, x).value));
        }
    }
    std::ostringstream d;
    d << "worst relative deviation = " << worst;
    report(9, "special-function kernel within 1e-10 of its oracles", ok, d.str());
}

// --- criterion 10 ------------------------------------------------------
void criterion_10() {
    std::istringstream cfg_text(R"(
n1 = 2
n2 = 2
corr1 = exponential
corr2 = exponential
rho = 0.5
gamma_th_db = 5
inr_db = 1
trials = 100000
seed = 9
user = both
variable = snr_db
start = 4
stop = 20
step = 4
methods = exact, asymptotic, mc
)");
    const RunConfig cfg = parse_config(cfg_text);
    RunOptions one;
    one.workers = 1;
    RunOptions four;
    four.workers = 4;
    const std::string a = run_sweep_csv(cfg, one);
    const std::string b = run_sweep_csv(cfg, one);
    const std::string c = run_sweep_csv(cfg, four);
    const bool ok = (a == b) && (a == c) && !a.empty();
    std::ostringstream d;
    d << a.size() << " CSV bytes, repeat and 4-worker runs identical";
    report(10, "sweep output is byte-identical and worker-count independent", ok, d.str());
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
