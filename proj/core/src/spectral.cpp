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

#include "twrelay/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twrelay/specfun.hpp"
#include "twrelay/summation.hpp"

namespace twrelay {

namespace {

void check_size(int size) {
    if (size < 1) throw std::invalid_argument("CorrelationModel: size must be >= 1");
}

// Relative gap below which two scaled eigenvalues are treated as
// coincident; the distinct-eigenvalue expansion is numerically explosive
// near coincidence.
constexpr double coincidence_gap = 1e-9;

} // namespace

CorrelationModel CorrelationModel::identity(int size) {
    check_size(size);
    return {Kind::identity, size, 0.0, {}};
}

CorrelationModel CorrelationModel::exponential(int size, double rho) {
    check_size(size);
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("CorrelationModel: exponential rho must lie in [0, 1)");
    return {Kind::exponential, size, rho, {}};
}

CorrelationModel CorrelationModel::explicit_spectrum(int size, std::vector<EigenvalueGroup> groups) {
    check_size(size);
    int total = 0;
    double mass = 0.0;
    for (const auto& g : groups) {
        if (!(g.eigenvalue > 0.0))
            throw std::invalid_argument("CorrelationModel: eigenvalues must be positive");
        if (g.multiplicity < 1)
            throw std::invalid_argument("CorrelationModel: multiplicities must be >= 1");
        total += g.multiplicity;
        mass += g.eigenvalue * g.multiplicity;
    }
    if (total != size)
        throw std::invalid_argument("CorrelationModel: multiplicities must sum to the size");
    if (std::abs(mass - size) > 1e-6 * size)
        throw std::invalid_argument(
            "CorrelationModel: eigenvalue mass must equal the size (unit-diagonal correlation)");
    for (std::size_t a = 0; a < groups.size(); ++a)
        for (std::size_t b = a + 1; b < groups.size(); ++b)
            if (std::abs(groups[a].eigenvalue - groups[b].eigenvalue) <
                coincidence_gap * std::max(groups[a].eigenvalue, groups[b].eigenvalue))
                throw std::invalid_argument("CorrelationModel: eigenvalues must be pairwise distinct; "
                                            "merge their multiplicities instead");
    std::sort(groups.begin(), groups.end(),
              [](const EigenvalueGroup& a, const EigenvalueGroup& b) { return a.eigenvalue > b.eigenvalue; });
    return {Kind::explicit_spectrum, size, 0.0, std::move(groups)};
}

int SpectralExpansion::total_multiplicity() const {
    int n = 0;
    for (const auto& c : components) n += c.multiplicity;
    return n;
}

double SpectralExpansion::theta_sum() const {
    NeumaierSum s;
    for (const auto& c : components)
        for (double th : c.theta) s.add(th);
    return s.value();
}

double SpectralExpansion::theta_mean() const {
    NeumaierSum s;
    for (const auto& c : components)
        for (int j = 1; j <= c.multiplicity; ++j) s.add(c.theta[static_cast<std::size_t>(j - 1)] * j * c.chi);
    return s.value();
}

std::vector<EigenvalueGroup> eigen_spectrum(const CorrelationModel& model) {
    const int n = model.size;
    switch (model.kind) {
    case CorrelationModel::Kind::identity:
        return {{1.0, n}};
    case CorrelationModel::Kind::explicit_spectrum:
        return model.groups;
    case CorrelationModel::Kind::exponential:
        break;
    }
    if (model.rho == 0.0 || n == 1) return {{1.0, n}};

    Eigen::MatrixXd xi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xi(i, j) = std::pow(model.rho, std::abs(i - j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(xi);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigen_spectrum: eigendecomposition failed");

    for (int c = 0; c < n; ++c) {
        const double residual = (xi * solver.eigenvectors().col(c) -
                                 solver.eigenvalues()(c) * solver.eigenvectors().col(c))
                                    .norm();
        if (residual > 1e-12 * n)
            throw std::runtime_error("eigen_spectrum: eigenvalue residual above tolerance");
    }

    std::vector<EigenvalueGroup> spectrum;
    spectrum.reserve(static_cast<std::size_t>(n));
    for (int c = n - 1; c >= 0; --c) { // Eigen sorts ascending
        const double lambda = solver.eigenvalues()(c);
        if (!(lambda > 0.0))
            throw std::runtime_error("eigen_spectrum: nonpositive eigenvalue (model not full rank)");
        spectrum.push_back({lambda, 1});
    }
    double sum = 0.0;
    for (const auto& g : spectrum) sum += g.eigenvalue;
    if (std::abs(sum - n) > 1e-10 * n)
        throw std::runtime_error("eigen_spectrum: eigenvalues do not sum to the matrix size");
    return spectrum;
}

SpectralExpansion expansion_coefficients(const std::vector<EigenvalueGroup>& spectrum, double omega) {
    if (spectrum.empty()) throw std::invalid_argument("expansion_coefficients: empty spectrum");
    if (!(omega > 0.0)) throw std::invalid_argument("expansion_coefficients: omega must be positive");

    const std::size_t q = spectrum.size();
    std::vector<double> chi(q);
    for (std::size_t i = 0; i < q; ++i) {
        if (!(spectrum[i].eigenvalue > 0.0) || spectrum[i].multiplicity < 1)
            throw std::invalid_argument("expansion_coefficients: invalid spectrum entry");
        chi[i] = spectrum[i].eigenvalue * omega;
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
            if (std::abs(chi[a] - chi[b]) < coincidence_gap * std::max(chi[a], chi[b]))
                throw std::invalid_argument(
                    "expansion_coefficients: coincident eigenvalues (relative gap < 1e-9); "
                    "perturb the spectrum or merge the multiplicities");

    SpectralExpansion expansion;
    expansion.components.resize(q);

    // Single distinct eigenvalue: gamma_n is Erlang(N), one expansion term.
    if (q == 1) {
        auto& c = expansion.components[0];
        c.chi = chi[0];
        c.multiplicity = spectrum[0].multiplicity;
        c.theta.assign(static_cast<std::size_t>(c.multiplicity), 0.0);
        c.theta.back() = 1.0;
        return expansion;
    }

    for (std::size_t i = 0; i < q; ++i) {
        auto& comp = expansion.components[i];
        comp.chi = chi[i];
        comp.multiplicity = spectrum[i].multiplicity;
        const int alpha_i = comp.multiplicity;
        comp.theta.assign(static_cast<std::size_t>(alpha_i), 0.0);

        // Partial fraction of prod_l (1 - s chi_l)^{-alpha_l}:
        //   theta_{ij} = G^{(m)}(0) / m!,  m = alpha_i - j,
        //   G(v) = prod_{l != i} [chi_i / (chi_i - chi_l + v chi_l)]^{alpha_l},
        // with G^{(m)} built from the logarithmic derivative
        //   psi^{(p)}(0) = (-1)^{p+1} p! sum_{l != i} alpha_l (chi_l/(chi_i-chi_l))^{p+1}.
        double g0 = 1.0;
        for (std::size_t l = 0; l < q; ++l) {
            if (l == i) continue;
            g0 *= std::pow(chi[i] / (chi[i] - chi[l]), spectrum[l].multiplicity);
        }

        const int mmax = alpha_i - 1;
        std::vector<double> psi(static_cast<std::size_t>(std::max(mmax, 1)), 0.0);
        double pfact = 1.0;
        for (int p = 0; p < mmax; ++p) {
            if (p > 0) pfact *= p;
            double s = 0.0;
            for (std::size_t l = 0; l < q; ++l) {
                if (l == i) continue;
                s += spectrum[l].multiplicity * std::pow(chi[l] / (chi[i] - chi[l]), p + 1);
            }
            psi[static_cast<std::size_t>(p)] = ((p % 2 == 0) ? -1.0 : 1.0) * pfact * s;
        }

        std::vector<double> deriv(static_cast<std::size_t>(alpha_i), 0.0);
        deriv[0] = g0;
        for (int m = 1; m <= mmax; ++m) {
            double binom = 1.0; // C(m-1, p)
            NeumaierSum s;
            for (int p = 0; p <= m - 1; ++p) {
                if (p > 0) binom *= static_cast<double>(m - p) / p;
                s.add(binom * psi[static_cast<std::size_t>(p)] * deriv[static_cast<std::size_t>(m - 1 - p)]);
            }
            deriv[static_cast<std::size_t>(m)] = s.value();
        }

        double mfact = 1.0;
        for (int m = 0; m <= mmax; ++m) {
            if (m > 0) mfact *= m;
            comp.theta[static_cast<std::size_t>(alpha_i - m - 1)] = deriv[static_cast<std::size_t>(m)] / mfact;
        }
    }
    return expansion;
}

double gain_cdf(const SpectralExpansion& expansion, double snr, double gamma) {
    if (!(snr > 0.0)) throw std::invalid_argument("gain_cdf: snr must be positive");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gain_cdf: gamma must be nonnegative");
    if (gamma == 0.0) return 0.0;

    NeumaierSum acc;
    for (const auto& c : expansion.components) {
        const double x = gamma / (snr * c.chi);
        const double e = std::exp(-x);
        // sum_j theta_j sum_{k<j} x^k/k!  ==  sum_k (x^k/k!) * suffix_j>k theta_j
        double suffix = 0.0;
        std::vector<double> suf(static_cast<std::size_t>(c.multiplicity));
        for (int j = c.multiplicity; j >= 1; --j) {
            suffix += c.theta[static_cast<std::size_t>(j - 1)];
            suf[static_cast<std::size_t>(j - 1)] = suffix;
        }
        double xk = 1.0;
        for (int k = 0; k < c.multiplicity; ++k) {
            if (k > 0) xk *= x / k;
            acc.add(suf[static_cast<std::size_t>(k)] * xk * e);
        }
    }
    const double f = 1.0 - acc.value();
    return std::min(1.0, std::max(0.0, f));
}

double gain_pdf(const SpectralExpansion& expansion, double snr, double gamma) {
    if (!(snr > 0.0)) throw std::invalid_argument("gain_pdf: snr must be positive");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gain_pdf: gamma must be nonnegative");

    NeumaierSum acc;
    for (const auto& c : expansion.components) {
        const double scale = snr * c.chi;
        const double e = std::exp(-gamma / scale);
        double pw = 1.0 / scale; // gamma^{j-1} / (Gamma(j) scale^j)
        for (int j = 1; j <= c.multiplicity; ++j) {
            if (j > 1) pw *= gamma / ((j - 1.0) * scale);
            acc.add(c.theta[static_cast<std::size_t>(j - 1)] * pw * e);
        }
    }
    return std::max(0.0, acc.value());
}

} // namespace twrelay
