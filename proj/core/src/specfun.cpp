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

#include "twrelay/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twrelay::specfun {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// Chebyshev series for the exponentially scaled K0 and K1 on x > 2,
// ported from the public-domain SLATEC FNLIB data (DBSK0E / DBSK1E).
// AK0 covers 2 < x <= 8 in the variable (16/x - 5)/3, AK02 covers x > 8
// in 16/x - 1.
constexpr std::array<double, 38> ak0cs = {
    -0.07643947903327941424082978270088,
    -0.02235652605699819052023095550791,
    7.734181154693858235300618174047e-4,
    -4.281006688886099464452146435416e-5,
    3.08170017386297474365001482666e-6,
    -2.639367222009664974067448892723e-7,
    2.563713036403469206294088265742e-8,
    -2.742705549900201263857211915244e-9,
    3.169429658097499592080832873403e-10,
    -3.902353286962184141601065717962e-11,
    5.068040698188575402050092127286e-12,
    -6.889574741007870679541713557984e-13,
    9.744978497825917691388201336831e-14,
    -1.427332841884548505389855340122e-14,
    2.156412571021463039558062976527e-15,
    -3.34965425514956277218878205853e-16,
    5.335260216952911692145280392601e-17,
    -8.693669980890753807639622378837e-18,
    1.446404347862212227887763442346e-18,
    -2.452889825500129682404678751573e-19,
    4.2337545262321715728217063424e-20,
    -7.427946526454464195695341294933e-21,
    1.3231505293926668662779674624e-21,
    -2.390587164739649451335981465599e-22,
    4.376827585923226140165712554666e-23,
    -8.113700607345118059339011413333e-24,
    1.521819913832172958310378154666e-24,
    -2.886041941483397770235958613333e-25,
    5.530620667054717979992610133333e-26,
    -1.070377329249898728591633066666e-26,
    2.091086893142384300296328533333e-27,
    -4.121713723646203827410261333333e-28,
    8.19348397112130764013568e-29,
    -1.642000275459297726780757333333e-29,
    3.316143281480227195890346666666e-30,
    -6.746863644145295941085866666666e-31,
    1.382429146318424677635413333333e-31,
    -2.851874167359832570811733333333e-32,
};

constexpr std::array<double, 33> ak02cs = {
    -0.01201869826307592239839346212452,
    -0.009174852691025695310652561075713,
    1.444550931775005821048843878057e-4,
    -4.013614175435709728671021077879e-6,
    1.567831810852310672590348990333e-7,
    -7.77011043852173771031579975446e-9,
    4.611182576179717882533130529586e-10,
    -3.158592997860565770526665803309e-11,
    2.435018039365041127835887814329e-12,
    -2.074331387398347897709853373506e-13,
    1.925787280589917084742736504693e-14,
    -1.927554805838956103600347182218e-15,
    2.062198029197818278285237869644e-16,
    -2.341685117579242402603640195071e-17,
    2.805902810643042246815178828458e-18,
    -3.530507631161807945815482463573e-19,
    4.645295422935108267424216337066e-20,
    -6.368625941344266473922053461333e-21,
    9.0695213109865155676223488e-22,
    -1.337974785423690739845005311999e-22,
    2.03983602185995231552208896e-23,
    -3.207027481367840500060869973333e-24,
    5.189744413662309963626359466666e-25,
    -8.629501497540572192964607999999e-26,
    1.4721611831025598552080384e-26,
    -2.573069023867011283812351999999e-27,
    4.60177408664351658737664e-28,
    -8.411555324201093737130666666666e-29,
    1.569806306635368939301546666666e-29,
    -2.988226453005757788979199999999e-30,
    5.796831375216836520618666666666e-31,
    -1.145035994347681332155733333333e-31,
    2.301266594249682802005333333333e-32,
};

constexpr std::array<double, 38> ak1cs = {
    0.27443134069738829695257666227266,
    0.07571989953199367817089237814929,
    -0.0014410515564754061229853116175625,
    6.6501169551257479394251385477036e-5,
    -4.3699847095201407660580845089167e-6,
    3.5402774997630526799417139008534e-7,
    -3.3111637792932920208982688245704e-8,
    3.4459775819010534532311499770992e-9,
    -3.8989323474754271048981937492758e-10,
    4.7208197504658356400947449339005e-11,
    -6.047835662875356234537359156289e-12,
    8.1284948748658747888193837985663e-13,
    -1.1386945747147891428923915951042e-13,
    1.654035840846228232597294820509e-14,
    -2.4809025677068848221516010440533e-15,
    3.8292378907024096948429227299157e-16,
    -6.0647341040012418187768210377386e-17,
    9.8324256232648616038194004650666e-18,
    -1.6284168738284380035666620115626e-18,
    2.7501536496752623718284120337066e-19,
    -4.7289666463953250924281069568e-20,
    8.2681500028109932722392050346666e-21,
    -1.4681405136624956337193964885333e-21,
    2.6447639269208245978085894826666e-22,
    -4.82901575648563878979698688e-23,
    8.9293020743610130180656332799999e-24,
    -1.6708397168972517176997751466666e-24,
    3.1616456034040694931368618666666e-25,
    -6.0462055312274989106506410666666e-26,
    1.1678798942042732700718421333333e-26,
    -2.277374158265399623286784e-27,
    4.4811097300773675795305813333333e-28,
    -8.8932884769020194062336e-29,
    1.7794680018850275131392e-29,
    -3.5884555967329095821994666666666e-30,
    7.2906290492694257991679999999999e-31,
    -1.4918449845546227073024e-31,
    3.0736573872934276300799999999999e-32,
};

constexpr std::array<double, 33> ak12cs = {
    0.06379308343739001036600488534102,
    0.02832887813049720935835030284708,
    -2.475370673905250345414545566732e-4,
    5.771972451607248820470976625763e-6,
    -2.068939219536548302745533196552e-7,
    9.739983441381804180309213097887e-9,
    -5.585336140380624984688895511129e-10,
    3.732996634046185240221212854731e-11,
    -2.825051961023225445135065754928e-12,
    2.372019002484144173643496955486e-13,
    -2.176677387991753979268301667938e-14,
    2.157914161616032453939562689706e-15,
    -2.290196930718269275991551338154e-16,
    2.582885729823274961919939565226e-17,
    -3.07675264126846318762109817344e-18,
    3.851487721280491597094896844799e-19,
    -5.0447948976415289771172825088e-20,
    6.888673850418544237018292223999e-21,
    -9.77504154195011830300213248e-22,
    1.437416218523836461001659733333e-22,
    -2.185059497344347373499733333333e-23,
    3.4262456218092206316453888e-24,
    -5.531064394246408232501248e-25,
    9.176601505685995403782826666666e-26,
    -1.562287203618024911448746666666e-26,
    2.725419375484333132349439999999e-27,
    -4.865674910074827992378026666666e-28,
    8.879388552723502587357866666666e-29,
    -1.654585918039257548936533333333e-29,
    3.145111321357848674303999999999e-30,
    -6.092998312193127612416e-31,
    1.202021939369815834623999999999e-31,
    -2.412930801459408841386666666666e-32,
};

template <std::size_t N>
double cheb_eval(double x, const std::array<double, N>& cs) {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double twox = 2.0 * x;
    for (int i = static_cast<int>(N) - 1; i >= 0; --i) {
        b2 = b1;
        b1 = b0;
        b0 = twox * b1 - b2 + cs[static_cast<std::size_t>(i)];
    }
    return 0.5 * (b0 - b2);
}

// e^x K_0(x) and e^x K_1(x) for x > 2.
double bessel_k0_scaled_large(double x) {
    if (x <= 8.0) return (cheb_eval((16.0 / x - 5.0) / 3.0, ak0cs) + 1.25) / std::sqrt(x);
    return (cheb_eval(16.0 / x - 1.0, ak02cs) + 1.25) / std::sqrt(x);
}

double bessel_k1_scaled_large(double x) {
    if (x <= 8.0) return (cheb_eval((16.0 / x - 5.0) / 3.0, ak1cs) + 1.25) / std::sqrt(x);
    return (cheb_eval(16.0 / x - 1.0, ak12cs) + 1.25) / std::sqrt(x);
}

// K_0 and K_1 by the ascending series, valid on 0 < x <= 2:
//   K_0(x) = sum_w (x^2/4)^w / (w!)^2 (H_w - euler_gamma - ln(x/2))
//   K_1(x) = 1/x + sum_w (x/2)^{2w+1}/(w!(w+1)!) (ln(x/2) + euler_gamma
//            - H_w - 1/(2(w+1)))
void bessel_k01_small(double x, double& k0, double& k1) {
    const double lhalf = std::log(0.5 * x);
    const double q = 0.25 * x * x;
    double term0 = 1.0;             // (x^2/4)^w / (w!)^2
    double term1 = 0.5 * x;         // (x/2)^{2w+1} / (w!(w+1)!)
    double hw = 0.0;                // harmonic number H_w
    double s0 = 0.0, s1 = 0.0;
    for (int w = 0; w < 40; ++w) {
        const double c0 = term0 * (hw - euler_gamma - lhalf);
        const double c1 = term1 * (lhalf + euler_gamma - hw - 0.5 / (w + 1));
        s0 += c0;
        s1 += c1;
        if (std::abs(term0) < eps * std::abs(s0) && w > 2) break;
        hw += 1.0 / (w + 1);
        term0 *= q / ((w + 1.0) * (w + 1.0));
        term1 *= q / ((w + 1.0) * (w + 2.0));
    }
    k0 = s0;
    k1 = 1.0 / x + s1;
}

void bessel_k01(double x, double& k0, double& k1) {
    if (x <= 2.0) {
        bessel_k01_small(x, k0, k1);
    } else {
        const double e = std::exp(-x);
        k0 = e * bessel_k0_scaled_large(x);
        k1 = e * bessel_k1_scaled_large(x);
    }
}

void check_bessel_args(int order, double x, int max_order) {
    if (!(x > 0.0))
        throw std::invalid_argument("bessel_k_int: requires x > 0");
    if (std::abs(order) > max_order)
        throw std::invalid_argument("bessel_k_int: |order| " + std::to_string(order) +
                                    " exceeds maximum " + std::to_string(max_order));
}

// E_1(x) for 0 < x <= 1 by the alternating power series.
double exp_integral_e1_series(double x) {
    double sum = -euler_gamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -x / k;
        const double c = -term / k;
        sum += c;
        if (std::abs(c) < eps * std::abs(sum)) break;
    }
    return sum;
}

// Continued fraction for E_n(x), n >= 1, x > 1 (modified Lentz).
double exp_integral_cf(int n, double x) {
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + n;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * (n - 1.0 + i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= eps) break;
    }
    return h * std::exp(-x);
}

} // namespace

SpecialValue gamma_int(int n) {
    if (n <= 0)
        throw std::invalid_argument("gamma_int: requires n >= 1");
    if (n > 171)
        throw std::overflow_error("gamma_int: (n-1)! overflows binary64 for n > 171");
    long double f = 1.0L;
    for (int m = 2; m < n; ++m) f *= m;
    const double v = static_cast<double>(f);
    return {v, 2.0 * eps * v};
}

SpecialValue upper_incomplete_gamma(int a, double x) {
    if (a <= 0)
        throw std::invalid_argument("upper_incomplete_gamma: requires a >= 1");
    if (!(x >= 0.0))
        throw std::invalid_argument("upper_incomplete_gamma: requires x >= 0");
    if (a > 171)
        throw std::overflow_error("upper_incomplete_gamma: Gamma(a, 0) overflows for a > 171");
    if (x <= 650.0) {
        // Gamma(a,x) = (a-1)! e^{-x} sum_{m<a} x^m/m!; all terms positive.
        double term = 1.0, sum = 1.0;
        for (int m = 1; m < a; ++m) {
            term *= x / m;
            sum += term;
        }
        const double v = gamma_int(a).value * (std::exp(-x) * sum);
        return {v, (a + 4.0) * eps * v};
    }
    // Log-space assembly for large x; the result may legitimately
    // underflow to zero.
    double lsum = 0.0; // log of sum_{m<a} x^m/m!, by log-sum-exp
    const double lx = std::log(x);
    double lmax = -std::numeric_limits<double>::infinity();
    std::array<double, 172> lt{};
    for (int m = 0; m < a; ++m) {
        lt[static_cast<std::size_t>(m)] = m * lx - std::lgamma(m + 1.0);
        lmax = std::max(lmax, lt[static_cast<std::size_t>(m)]);
    }
    double s = 0.0;
    for (int m = 0; m < a; ++m) s += std::exp(lt[static_cast<std::size_t>(m)] - lmax);
    lsum = lmax + std::log(s);
    const double v = std::exp(std::lgamma(static_cast<double>(a)) - x + lsum);
    return {v, (a + 8.0) * eps * v};
}

SpecialValue digamma_int(int n) {
    if (n <= 0)
        throw std::invalid_argument("digamma_int: requires n >= 1");
    long double h = 0.0L;
    for (int m = 1; m < n; ++m) h += 1.0L / m;
    const double v = static_cast<double>(h - static_cast<long double>(euler_gamma));
    return {v, (n + 2.0) * eps * std::max(1.0, std::abs(v))};
}

SpecialValue bessel_k_int(int order, double x, int max_order) {
    check_bessel_args(order, x, max_order);
    const int n = std::abs(order); // K_{-n} = K_n
    double k0, k1;
    bessel_k01(x, k0, k1);
    if (n == 0) return {k0, 4.0 * eps * k0};
    double prev = k0, cur = k1;
    for (int m = 1; m < n; ++m) {
        const double next = prev + (2.0 * m / x) * cur;
        if (!std::isfinite(next))
            throw std::overflow_error("bessel_k_int: K_" + std::to_string(n) + "(" +
                                      std::to_string(x) + ") overflows binary64");
        prev = cur;
        cur = next;
    }
    return {cur, (4.0 + n) * eps * cur};
}

double log_bessel_k_int(int order, double x, int max_order) {
    check_bessel_args(order, x, max_order);
    const int n = std::abs(order);
    double lk0, lk1;
    if (x <= 2.0) {
        double k0, k1;
        bessel_k01_small(x, k0, k1);
        lk0 = std::log(k0);
        lk1 = std::log(k1);
    } else {
        lk0 = -x + std::log(bessel_k0_scaled_large(x));
        lk1 = -x + std::log(bessel_k1_scaled_large(x));
    }
    if (n == 0) return lk0;
    // ln K_{m+1} = ln K_m + ln(2m/x + K_{m-1}/K_m); the ratio is < 1.
    double la = lk0, lb = lk1;
    for (int m = 1; m < n; ++m) {
        const double lnext = lb + std::log(2.0 * m / x + std::exp(la - lb));
        la = lb;
        lb = lnext;
    }
    return lb;
}

long double bessel_k_power_scaled(int order, double z, int max_order) {
    check_bessel_args(order, z, max_order);
    const int n = std::abs(order);
    long double scaled;
    if (z > 2.0 || n == 0) {
        scaled = std::pow(0.5L * z, n) *
                 static_cast<long double>(bessel_k_int(n, z, max_order).value);
    } else {
        // (z/2)^n K_n(z) by the ascending series, all in extended precision:
        //   1/2 sum_{w<n} (-1)^w (n-1-w)!/w! q^w
        //   + (-1)^{n+1} q^n sum_w q^w [ln(z/2) + eg - H_w/2 - H_{n+w}/2 ...]
        // with q = (z/2)^2; psi(m+1) = -eg + H_m.
        const long double q = 0.25L * z * z;
        const long double lh = std::log(0.5L * z);
        long double finite = 0.0L;
        long double fnum = 1.0L; // (n-1-w)!
        for (int m = 1; m <= n - 1; ++m) fnum *= m;
        long double wfact = 1.0L;
        long double qp = 1.0L;
        for (int w = 0; w <= n - 1; ++w) {
            if (w > 0) {
                fnum /= (n - w);
                wfact *= w;
                qp *= q;
            }
            finite += 0.5L * ((w % 2 == 0) ? 1.0L : -1.0L) * fnum / wfact * qp;
        }
        long double hw = 0.0L;  // H_w
        long double hnw = 0.0L; // H_{n+w}
        for (int m = 1; m <= n; ++m) hnw += 1.0L / m;
        const long double eg = 0.57721566490153286060651209008240243L;
        long double term = 1.0L; // q^w / (w! (n+w)!)
        for (int m = 1; m <= n; ++m) term /= m;
        long double logpart = 0.0L;
        for (int w = 0; w < 60; ++w) {
            if (w > 0) {
                hw += 1.0L / w;
                hnw += 1.0L / (n + w);
                term *= q / (static_cast<long double>(w) * (n + w));
            }
            const long double c = term * (lh + eg - 0.5L * hw - 0.5L * hnw);
            logpart += c;
            if (std::abs(term) < 1e-22L * std::abs(logpart) && w > 2) break;
        }
        long double qn = 1.0L;
        for (int m = 0; m < n; ++m) qn *= q;
        scaled = finite + ((n % 2 == 0) ? -1.0L : 1.0L) * qn * logpart;
    }
    if (order >= 0) return scaled;
    // (z/2)^{-n} K_n = scaled / (z/2)^{2n}
    long double q2n = 1.0L;
    for (int m = 0; m < n; ++m) q2n *= 0.25L * static_cast<long double>(z) * z;
    return scaled / q2n;
}

SpecialValue gen_exp_integral(int order, double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("gen_exp_integral: requires x > 0");
    if (order == 0) {
        const double v = std::exp(-x) / x;
        return {v, 4.0 * eps * v};
    }
    if (order < 0) {
        // Ei_{-m}(x) = Gamma(m+1, x) / x^{m+1}.
        const int m = -order;
        if (m + 1 > 171)
            throw std::overflow_error("gen_exp_integral: order too negative");
        const SpecialValue g = upper_incomplete_gamma(m + 1, x);
        const double v = g.value * std::pow(x, -(m + 1.0));
        if (!std::isfinite(v))
            throw std::overflow_error("gen_exp_integral: Gamma(m+1,x)/x^{m+1} overflows");
        return {v, (m + 8.0) * eps * v};
    }
    if (x > 1.0) {
        const double v = exp_integral_cf(order, x);
        return {v, 8.0 * eps * std::abs(v)};
    }
    double e = exp_integral_e1_series(x);
    if (order == 1) return {e, 8.0 * eps * std::abs(e)};
    const double emx = std::exp(-x);
    for (int j = 1; j < order; ++j) e = (emx - x * e) / j;
    return {e, (8.0 + order) * eps * std::abs(e)};
}

} // namespace twrelay::specfun
