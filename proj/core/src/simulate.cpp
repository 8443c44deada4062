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

#include "twrelay/simulate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace twrelay {

namespace {

void check_trials(std::uint64_t trials) {
    if (trials < 10000)
        throw std::invalid_argument("Monte Carlo estimates require trials >= 10^4");
}

McEstimate finish(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed) {
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    const double se = (successes == 0)
                          ? 3.0 / static_cast<double>(trials)
                          : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {p, se, trials, seed};
}

double draw_gamma3(const InterferenceProfile& cci, CounterStream& stream) {
    double g3 = 0.0;
    for (double inr : cci.mean_inr) g3 += stream.exponential(inr);
    return g3;
}

// Partition [0, trials) into worker chunks; per-trial streams make the
// split irrelevant to the result, integer counts make the reduction
// order-free.
template <typename TrialFn>
std::uint64_t run_trials(std::uint64_t trials, int workers, const TrialFn& outage_on_trial) {
    workers = std::max(1, workers);
    if (workers == 1) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < trials; ++i) hits += outage_on_trial(i) ? 1 : 0;
        return hits;
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(trials, lo + chunk);
            std::uint64_t hits = 0;
            for (std::uint64_t i = lo; i < hi; ++i) hits += outage_on_trial(i) ? 1 : 0;
            counts[static_cast<std::size_t>(w)] = hits;
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

Eigen::MatrixXd correlation_sqrt(const CorrelationModel& model) {
    const int n = model.size;
    if (model.kind == CorrelationModel::Kind::identity)
        return Eigen::MatrixXd::Identity(n, n);
    if (model.kind != CorrelationModel::Kind::exponential)
        throw std::invalid_argument("explicit-vector mode requires identity or exponential "
                                    "correlation (a matrix realization)");
    Eigen::MatrixXd xi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xi(i, j) = std::pow(model.rho, std::abs(i - j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(xi);
    return solver.eigenvectors() * solver.eigenvalues().cwiseSqrt().asDiagonal() *
           solver.eigenvectors().transpose();
}

} // namespace

double sample_channel_gain(const SpectralExpansion& expansion, double snr, CounterStream& stream) {
    double g = 0.0;
    for (const auto& c : expansion.components) {
        double s = 0.0;
        for (int m = 0; m < c.multiplicity; ++m) s += stream.exponential(1.0);
        g += c.chi * s;
    }
    return snr * g;
}

McEstimate estimate_user_outage(const Scenario& s, int user, std::uint64_t trials,
                                std::uint64_t seed, int workers) {
    if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
    check_trials(trials);
    const double c = gain_constant(s).value;
    const double gth = s.threshold;
    const auto hits = run_trials(trials, workers, [&](std::uint64_t trial) {
        CounterStream stream(seed, trial);
        const double g1 = sample_channel_gain(s.expansion1, s.mean_snr, stream);
        const double g2 = sample_channel_gain(s.expansion2, s.mean_snr, stream);
        const double g3 = draw_gamma3(s.interference, stream);
        const double own = (user == 1) ? g1 : g2;
        const double sinr = g1 * g2 / (own * (g3 + 1.0) + c);
        return sinr < gth;
    });
    return finish(hits, trials, seed);
}

McEstimate estimate_system_outage(const Scenario& s, std::uint64_t trials, std::uint64_t seed,
                                  int workers) {
    check_trials(trials);
    const double c = gain_constant(s).value;
    const double gth = s.threshold;
    const auto hits = run_trials(trials, workers, [&](std::uint64_t trial) {
        CounterStream stream(seed, trial);
        const double g1 = sample_channel_gain(s.expansion1, s.mean_snr, stream);
        const double g2 = sample_channel_gain(s.expansion2, s.mean_snr, stream);
        const double g3 = draw_gamma3(s.interference, stream);
        const double sinr1 = g1 * g2 / (g1 * (g3 + 1.0) + c);
        const double sinr2 = g1 * g2 / (g2 * (g3 + 1.0) + c);
        return std::min(sinr1, sinr2) < gth;
    });
    return finish(hits, trials, seed);
}

ExplicitCheck estimate_user_outage_explicit(const Scenario& s, int user, std::uint64_t trials,
                                            std::uint64_t seed) {
    if (user != 1 && user != 2) throw std::invalid_argument("user must be 1 or 2");
    check_trials(trials);

    const Eigen::MatrixXd sqrt1 = correlation_sqrt(s.node1.correlation);
    const Eigen::MatrixXd sqrt2 = correlation_sqrt(s.node2.correlation);
    const double c = gain_constant(s).value;
    const double gth = s.threshold;
    const double snr = s.mean_snr; // P_s / N_0 with N_0 = 1
    const double g_sq = snr / c;   // relay gain G^2 = P_s / (N_0 C)

    std::uint64_t hits = 0;
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        CounterStream stream(seed, trial);
        const auto draw_vector = [&](int n, double omega) {
            Eigen::VectorXcd h(n);
            for (int i = 0; i < n; ++i) {
                const auto z = stream.normal_pair();
                // circular complex Gaussian entry with power omega
                h(i) = std::complex<double>(z[0], z[1]) * std::sqrt(omega / 2.0);
            }
            return h;
        };
        const Eigen::VectorXcd v1 = sqrt1 * draw_vector(s.node1.antennas, s.omega1);
        const Eigen::VectorXcd v2 = sqrt2 * draw_vector(s.node2.antennas, s.omega2);
        double interference_power = 0.0; // sum_l P_l |g_l|^2 / N_0
        for (double inr : s.interference.mean_inr) interference_power += stream.exponential(inr);

        const Eigen::VectorXcd& v_own = (user == 1) ? v1 : v2;
        const Eigen::VectorXcd& v_other = (user == 1) ? v2 : v1;

        // Matched weights: transmit w_T = conj(v_other)/||v_other|| at the
        // far node, receive w_R = v_own^dagger/||v_own|| at this node.
        const Eigen::VectorXcd w_t = v_other.conjugate() / v_other.norm();
        const Eigen::RowVectorXcd w_r = v_own.adjoint() / v_own.norm();
        const double tx_gain_sq = std::norm((v_other.transpose() * w_t).value());
        const double rx_gain_sq = std::norm((w_r * v_own).value());

        // SINR assembled from the received-signal terms (P_s = snr, N_0 = 1):
        // the relay-borne noise and interference pass through the same
        // receive projection as the signal, the local noise through ||w_R||^2.
        const double num = snr * g_sq * rx_gain_sq * tx_gain_sq;
        const double den =
            g_sq * rx_gain_sq * (interference_power + 1.0) + w_r.squaredNorm();
        const double sinr_signal = num / den;

        // Reduced ratio form with the same draws.
        const double g1 = snr * v1.squaredNorm();
        const double g2 = snr * v2.squaredNorm();
        const double own_gain = (user == 1) ? g1 : g2;
        const double sinr_reduced = g1 * g2 / (own_gain * (interference_power + 1.0) + c);

        const double rel = std::abs(sinr_signal - sinr_reduced) /
                           std::max(sinr_signal, std::numeric_limits<double>::min());
        worst = std::max(worst, rel);
        hits += (sinr_signal < gth) ? 1 : 0;
    }
    return {finish(hits, trials, seed), worst};
}

} // namespace twrelay
