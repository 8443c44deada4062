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

#ifndef TWRELAY_OUTAGE_DETAIL_HPP
#define TWRELAY_OUTAGE_DETAIL_HPP

#include "twrelay/outage_asymptotic.hpp"
#include "twrelay/outage_exact.hpp"

namespace twrelay::detail {

// Exact user outage with an explicitly supplied gain constant; the
// validation negative-control hook perturbs C through this entry point.
OutageResult user_outage_exact_with_c(const Scenario& scenario, int user, double c);

// The two leading-coefficient evaluation paths, individually reachable
// so their 1e-8 agreement on distinct-eigenvalue inputs stays testable.
// The public asymptotic_outage dispatches between them.
AsymptoticExpansion asymptotic_outage_general(const Scenario& scenario, int user);
AsymptoticExpansion asymptotic_outage_exponential(const Scenario& scenario, int user);

} // namespace twrelay::detail

#endif
