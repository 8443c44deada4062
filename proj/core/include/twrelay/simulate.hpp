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

#ifndef TWRELAY_SIMULATE_HPP
#define TWRELAY_SIMULATE_HPP

#include <cstdint>

#include "twrelay/model.hpp"
#include "twrelay/rng.hpp"

namespace twrelay {

// Empirical outage estimate. std_error is sqrt(p(1-p)/trials); when no
// outage was observed it instead carries the one-sided 95% upper bound
// 3/trials.
struct McEstimate {
    double p_hat;
    double std_error;
    std::uint64_t trials;
    std::uint64_t seed;
};

// One draw of the beamformed channel gain gamma_n at mean SNR snr, using
// the eigenbasis shortcut: a chi-weighted sum of unit-mean exponentials
// (the squared magnitudes of the rotated complex Gaussian entries).
double sample_channel_gain(const SpectralExpansion& expansion, double snr, CounterStream& stream);

// Empirical Pr(SINR_user < gamma_th) over `trials` draws. Results depend
// only on (scenario, user, trials, seed): trials are partitioned across
// workers by index with per-trial counter streams and integer success
// counts, so the worker count never changes the estimate.
McEstimate estimate_user_outage(const Scenario& scenario, int user, std::uint64_t trials,
                                std::uint64_t seed, int workers = 1);

// Empirical Pr(min(SINR_1, SINR_2) < gamma_th); the two SINRs share the
// per-trial channel draws. Supports L >= 0 (CCI included, beyond the
// closed form's reach).
McEstimate estimate_system_outage(const Scenario& scenario, std::uint64_t trials,
                                  std::uint64_t seed, int workers = 1);

// Slow cross-check: forms the correlated channel vectors explicitly,
// applies the transmit/receive beamforming weights, and evaluates the
// SINR from the received-signal expression as well as from the reduced
// ratio form; max_rel_mismatch reports the largest per-sample deviation
// between the two. Requires identity or exponential correlation models.
struct ExplicitCheck {
    McEstimate estimate;
    double max_rel_mismatch;
};

ExplicitCheck estimate_user_outage_explicit(const Scenario& scenario, int user,
                                            std::uint64_t trials, std::uint64_t seed);

} // namespace twrelay

#endif
