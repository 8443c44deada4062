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

#include "twrelay/outage_system.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "twrelay/specfun.hpp"
#include "twrelay/summation.hpp"

namespace twrelay {

namespace {

struct NonConvergent {};

void check_no_cci(const Scenario& s) {
    if (s.interference.count() != 0)
        throw std::invalid_argument("system outage closed form requires L = 0 (no CCI); "
                                    "use the Monte Carlo estimator with interferers");
}

// Inner series sum_s (-gamma_th C/(snr chi_b))^s/s! eps^{j+l-k-s}
// Ei_{s+k-j-l+1}(eps/(snr chi_a)), factored as eps^{j+l-k} sum_s q^s/s! E(n0+s).
// Throws NonConvergent when the term magnitudes grow for more than ten
// consecutive s, or have not started decreasing by max_terms.
double s_series(double q, int n0, double y, const SeriesControl& ctl) {
    NeumaierSum acc;
    double qs = 1.0; // q^s / s!
    double prev_mag = std::numeric_limits<double>::infinity();
    int grow_streak = 0;
    bool decreased = false;
    for (int s = 0; s < ctl.max_terms; ++s) {
        if (s > 0) qs *= q / s;
        const double term = qs * specfun::gen_exp_integral(n0 + s, y).value;
        acc.add(term);
        const double mag = std::abs(term);
        if (mag > prev_mag) {
            if (++grow_streak > 10) throw NonConvergent{};
        } else {
            grow_streak = 0;
            if (s > 0) decreased = true;
        }
        prev_mag = mag;
        if (mag <= ctl.rel_tol * std::abs(acc.value()) && s >= 1) return acc.value();
    }
    if (!decreased) throw NonConvergent{};
    return acc.value();
}

// I for one orientation: a = density-role expansion, b = CDF-role
// expansion. I = J1 + J2 with the F_a(eps) boundary terms of the two
// pieces carried explicitly (they cancel in the sum).
double eval_i_series(const SpectralExpansion& a, const SpectralExpansion& b, double snr,
                     double gth, double c, double eps, const SeriesControl& ctl) {
    NeumaierSum ei_part;
    NeumaierSum gamma_part;
    for (const auto& ac : a.components) {
        const double y = eps / (snr * ac.chi);
        for (int j = 1; j <= ac.multiplicity; ++j) {
            const double theta_a = ac.theta[static_cast<std::size_t>(j - 1)];
            if (theta_a == 0.0) continue;
            const double pref = theta_a / specfun::gamma_int(j).value *
                                std::pow(eps / (ac.chi * snr), j);
            for (const auto& bc : b.components) {
                const double xb = gth / (snr * bc.chi);
                const double exb = std::exp(-xb);
                const double q = -gth * c / (snr * bc.chi * eps);
                // J2 factors: (1 + chi_a/chi_b)^{-j} (1 + chi_b/chi_a)^{-k}
                const double a1 = 1.0 + ac.chi / bc.chi;
                const double a2 = 1.0 + bc.chi / ac.chi;
                const double mu_eps = y + eps / (snr * bc.chi);
                for (int t = 1; t <= bc.multiplicity; ++t) {
                    const double theta_b = bc.theta[static_cast<std::size_t>(t - 1)];
                    if (theta_b == 0.0) continue;
                    double kfact = 1.0;
                    double xbk = 1.0;
                    for (int k = 0; k <= t - 1; ++k) {
                        if (k > 0) {
                            kfact *= k;
                            xbk *= xb;
                        }
                        // J1 (Ei) piece
                        double binom = 1.0;
                        NeumaierSum lsum;
                        for (int l = 0; l <= k; ++l) {
                            if (l > 0) binom *= static_cast<double>(k - l + 1) / l;
                            const double ce = binom * std::pow(c / eps, static_cast<double>(k - l));
                            lsum.add(ce * s_series(q, k - j - l + 1, y, ctl));
                        }
                        ei_part.add(pref * theta_b / kfact * xbk * exb * lsum.value());
                        // J2 (incomplete gamma) piece
                        const double g = specfun::gamma_int(j + k).value -
                                         specfun::upper_incomplete_gamma(j + k, mu_eps).value;
                        gamma_part.add(theta_a * theta_b / (specfun::gamma_int(j).value * kfact) *
                                       std::pow(a1, -j) * std::pow(a2, -k) * g);
                    }
                }
            }
        }
    }
    const double f_a_eps = gain_cdf(a, snr, eps);
    const double j1 = 1.0 - f_a_eps - ei_part.value();
    const double j2 = f_a_eps - gamma_part.value();
    return j1 + j2;
}

// Adaptive Simpson fallback for the J1/J2 integrals when the series
// safeguard trips.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

double eval_i_quadrature(const SpectralExpansion& a, const SpectralExpansion& b, double snr,
                         double gth, double c, double eps) {
    // Upper truncation: past the slowest-decaying component's 80-fold
    // scale the density mass is negligible.
    double upper = eps;
    for (const auto& ac : a.components)
        upper = std::max(upper, eps + 80.0 * snr * ac.chi * ac.multiplicity);
    const auto j1_f = [&](double g) { return gain_pdf(a, snr, g) * gain_cdf(b, snr, gth + gth * c / g); };
    const auto j2_f = [&](double g) { return gain_pdf(a, snr, g) * gain_cdf(b, snr, g); };
    const double j1 = integrate(j1_f, eps, upper, 1e-12);
    const double j2 = integrate(j2_f, 0.0, eps, 1e-12);
    return j1 + j2;
}

} // namespace

double epsilon_root(double gamma_th, double c) {
    if (!(gamma_th > 0.0) || !(c > 0.0))
        throw std::invalid_argument("epsilon_root: gamma_th and C must be positive");
    return 0.5 * (gamma_th + std::sqrt(gamma_th * gamma_th + 4.0 * gamma_th * c));
}

SystemOutageParts system_outage_parts(const Scenario& s, const SeriesControl& series) {
    check_no_cci(s);
    if (series.max_terms < 5) throw std::invalid_argument("SeriesControl: max_terms must be >= 5");
    if (!(series.rel_tol > 0.0 && series.rel_tol <= 1e-6))
        throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1e-6]");

    const double c = gain_constant_no_cci(s).value;
    const double eps = epsilon_root(s.threshold, c);

    SystemOutageParts parts{0.0, 0.0, false};
    try {
        parts.i1 = eval_i_series(s.expansion1, s.expansion2, s.mean_snr, s.threshold, c, eps, series);
        parts.i2 = eval_i_series(s.expansion2, s.expansion1, s.mean_snr, s.threshold, c, eps, series);
    } catch (const NonConvergent&) {
        parts.rerouted = true;
        parts.i1 = eval_i_quadrature(s.expansion1, s.expansion2, s.mean_snr, s.threshold, c, eps);
        parts.i2 = eval_i_quadrature(s.expansion2, s.expansion1, s.mean_snr, s.threshold, c, eps);
    }
    return parts;
}

OutageResult system_outage_exact(const Scenario& s, const SeriesControl& series) {
    const SystemOutageParts parts = system_outage_parts(s, series);
    const double p = std::min(1.0, std::max(0.0, parts.i1 + parts.i2));
    return {p, parts.rerouted ? Method::system_quadrature : Method::system_exact};
}

std::vector<double> series_convergence_report(const Scenario& s, int s_count) {
    check_no_cci(s);
    if (s_count < 1) throw std::invalid_argument("series_convergence_report: s_count must be >= 1");

    const double snr = s.mean_snr;
    const double gth = s.threshold;
    const double c = gain_constant_no_cci(s).value;
    const double eps = epsilon_root(gth, c);
    const SpectralExpansion& a = s.expansion1;
    const SpectralExpansion& b = s.expansion2;

    std::vector<NeumaierSum> per_s(static_cast<std::size_t>(s_count));
    for (const auto& ac : a.components) {
        const double y = eps / (snr * ac.chi);
        for (int j = 1; j <= ac.multiplicity; ++j) {
            const double theta_a = ac.theta[static_cast<std::size_t>(j - 1)];
            if (theta_a == 0.0) continue;
            const double pref =
                theta_a / specfun::gamma_int(j).value * std::pow(eps / (ac.chi * snr), j);
            for (const auto& bc : b.components) {
                const double xb = gth / (snr * bc.chi);
                const double exb = std::exp(-xb);
                const double q = -gth * c / (snr * bc.chi * eps);
                for (int t = 1; t <= bc.multiplicity; ++t) {
                    const double theta_b = bc.theta[static_cast<std::size_t>(t - 1)];
                    if (theta_b == 0.0) continue;
                    double kfact = 1.0;
                    double xbk = 1.0;
                    for (int k = 0; k <= t - 1; ++k) {
                        if (k > 0) {
                            kfact *= k;
                            xbk *= xb;
                        }
                        double binom = 1.0;
                        for (int l = 0; l <= k; ++l) {
                            if (l > 0) binom *= static_cast<double>(k - l + 1) / l;
                            const double ce =
                                binom * std::pow(c / eps, static_cast<double>(k - l));
                            double qs = 1.0;
                            for (int sv = 0; sv < s_count; ++sv) {
                                if (sv > 0) qs *= q / sv;
                                const double term =
                                    qs * specfun::gen_exp_integral(k - j - l + 1 + sv, y).value;
                                per_s[static_cast<std::size_t>(sv)].add(
                                    pref * theta_b / kfact * xbk * exb * ce * term);
                            }
                        }
                    }
                }
            }
        }
    }
    std::vector<double> out(static_cast<std::size_t>(s_count));
    for (int sv = 0; sv < s_count; ++sv)
        out[static_cast<std::size_t>(sv)] = per_s[static_cast<std::size_t>(sv)].value();
    return out;
}

} // namespace twrelay
