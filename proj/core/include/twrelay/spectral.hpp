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

#ifndef TWRELAY_SPECTRAL_HPP
#define TWRELAY_SPECTRAL_HPP

#include <vector>

namespace twrelay {

struct EigenvalueGroup {
    double eigenvalue;
    int multiplicity;
};

// Antenna correlation model for one node. Exponential means the Toeplitz
// matrix [rho^{|i-j|}], full rank for 0 <= rho < 1. An explicit spectrum
// carries (eigenvalue, multiplicity) groups directly; eigenvalues must be
// positive, pairwise distinct, with multiplicities summing to the size and
// eigenvalue mass summing to the size (unit-diagonal correlation).
struct CorrelationModel {
    enum class Kind { identity, exponential, explicit_spectrum };

    Kind kind;
    int size;
    double rho;                           // exponential only
    std::vector<EigenvalueGroup> groups;  // explicit_spectrum only

    static CorrelationModel identity(int size);
    static CorrelationModel exponential(int size, double rho);
    static CorrelationModel explicit_spectrum(int size, std::vector<EigenvalueGroup> groups);
};

// Partial-fraction expansion of the beamformed channel gain distribution.
// Each component holds a scaled eigenvalue chi = lambda * Omega (linear
// power), its multiplicity, and the expansion coefficients theta[j-1] for
// j = 1..multiplicity. Immutable after construction.
struct SpectralExpansion {
    struct Component {
        double chi;
        int multiplicity;
        std::vector<double> theta;
    };

    std::vector<Component> components;

    int total_multiplicity() const;   // N
    double theta_sum() const;         // must be 1
    double theta_mean() const;        // sum theta_ij * j * chi_i, must be N*Omega
};

// Distinct eigenvalues with multiplicities, sorted descending. Identity
// gives {(1, N)}; the exponential model at rho = 0 reduces to it exactly.
std::vector<EigenvalueGroup> eigen_spectrum(const CorrelationModel& model);

// Expansion coefficients for a spectrum scaled by the mean channel power.
// Rejects spectra with coincident scaled eigenvalues (relative gap below
// 1e-9); merge the multiplicities or perturb the spectrum instead.
SpectralExpansion expansion_coefficients(const std::vector<EigenvalueGroup>& spectrum,
                                         double omega);

// CDF / PDF of the channel gain gamma_n at mean SNR snr (linear).
double gain_cdf(const SpectralExpansion& expansion, double snr, double gamma);
double gain_pdf(const SpectralExpansion& expansion, double snr, double gamma);

} // namespace twrelay

#endif
