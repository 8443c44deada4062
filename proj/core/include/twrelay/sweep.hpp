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

#ifndef TWRELAY_SWEEP_HPP
#define TWRELAY_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twrelay/config.hpp"
#include "twrelay/outage_system.hpp"

namespace twrelay {

struct SweepSpec {
    std::string variable;
    double start, stop, step;
    std::vector<std::string> methods;
};

SweepSpec sweep_spec_from_config(const RunConfig& config);

// Grid values start, start+step, ... while <= stop (with a half-step
// tolerance against accumulation).
std::vector<double> sweep_grid(const SweepSpec& spec);

struct RunOptions {
    std::uint64_t trials = 0; // 0: use the config value
    std::uint64_t seed = 0;   // 0: use the config value
    int max_series_terms = 0; // 0: SeriesControl default
    int workers = 1;
    double gain_scale_hook = 1.0; // test hook: perturbs C in validation runs
};

// Renders the sweep CSV (header variable,value,method,p,stderr,trials,seed;
// 12 significant digits; rows ordered by (value, method label)). Grid
// points are dispatched to a worker pool and buffered in grid order, so
// the bytes do not depend on the worker count.
std::string run_sweep_csv(const RunConfig& config, const RunOptions& options = {});

// Writes run_sweep_csv to out_path. Throws before touching the file on an
// invalid sweep (empty range, no methods).
void run_sweep(const RunConfig& config, const std::string& out_path,
               const RunOptions& options = {});

struct ValidateReport {
    bool passed;
    int checked;
    int failed;
    std::string table; // one line per comparison, PASS/FAIL tagged
};

// Runs every applicable closed form against Monte Carlo at each grid
// point: |closed form - p_hat| <= 3 stderr (when no outage is observed,
// the closed form must fall below the 95% upper bound 3/trials).
ValidateReport validate_run(const RunConfig& config, const RunOptions& options = {});

} // namespace twrelay

#endif
