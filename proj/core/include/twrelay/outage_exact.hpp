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

#ifndef TWRELAY_OUTAGE_EXACT_HPP
#define TWRELAY_OUTAGE_EXACT_HPP

#include "twrelay/model.hpp"

namespace twrelay {

enum class Method {
    exact_general,
    exact_exponential,
    exact_iid,
    asymptotic,
    system_exact,
    system_quadrature, // alternating-series safeguard rerouted to quadrature
    monte_carlo,
};

const char* method_name(Method m);

struct OutageResult {
    double p;
    Method method;
};

// Exact per-user outage probability for the general correlated expansion.
// user selects which terminal's SINR is thresholded; user 1 exchanges the
// roles of the two node expansions. Requires at least one interferer; for
// the no-CCI limit use the system-outage module or a vanishing INR.
OutageResult user_outage_exact(const Scenario& scenario, int user);

// Specialization for exponential correlation at both nodes (all expansion
// multiplicities one).
OutageResult user_outage_exponential(const Scenario& scenario, int user);

// Specialization for independent fading at both nodes (identity models).
OutageResult user_outage_iid(const Scenario& scenario, int user);

} // namespace twrelay

#endif
