/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/bessel_kis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hhl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
constexpr double kSMax = 200.0;  // sinh(pi s) overflows near s ~ 225

void check_s(double s) {
    if (!(s > 0.0) || !(s <= kSMax))
        raise(errc::domain, "order s must lie in (0, 200]");
}

// Series + integral switch point.  Below: power series with the sinh(pi s)
// amplitude factored out (no large-s cancellation).  Above: trapezoidal
// integral, where the oscillatory cancellation is mild.
double x_switch(double s) { return std::max(2.0, 1.25 * s); }

// K_{is}(x) = -A(s) sum_m t_m sin(s ln(x/2) - phi_m),
//   t_0 = 1,     t_m = t_{m-1} (x^2/4) / (m sqrt(m^2+s^2)),
//   phi_0 = arg Gamma(1+is),  phi_m = phi_{m-1} + atan(s/m),
//   A(s) = sqrt(pi / (s sinh(pi s))).
double series_value(double s, double x, double phi0, double amp) {
    const double L = std::log(0.5 * x);
    double phi = phi0;
    double t = 1.0;
    double sum = std::sin(s * L - phi);
    for (int m = 1; m <= 600; ++m) {
        t *= (0.25 * x * x) / (m * std::hypot(double(m), s));
        phi += std::atan2(s, double(m));
        sum += t * std::sin(s * L - phi);
        if (t < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return -amp * sum;
}

// e^x K_{is}(x) = int_0^inf exp(-x (cosh t - 1)) cos(s t) dt, trapezoid with
// step halving and compensated summation.  cosh t - 1 = 2 sinh^2(t/2).
double scaled_tail_integral(double s, double x) {
    const double tmax = std::acosh(1.0 + 50.0 / x);
    auto sweep = [&](double h) {
        double sum = 0.5;  // t = 0 term (integrand = 1), trapezoid half weight
        double comp = 0.0;
        const int n = static_cast<int>(tmax / h) + 1;
        for (int j = 1; j <= n; ++j) {
            const double t = j * h;
            const double sh = std::sinh(0.5 * t);
            const double term = std::exp(-x * 2.0 * sh * sh) * std::cos(s * t);
            const double y = term - comp;
            const double nxt = sum + y;
            comp = (nxt - sum) - y;
            sum = nxt;
        }
        return sum * h;
    };
    double h = std::min(0.5, kPi / (4.0 * (s + 1.0)));
    double prev = sweep(h);
    for (int it = 0; it < 12; ++it) {
        h *= 0.5;
        const double cur = sweep(h);
        const bool done = std::abs(cur - prev) <= 1e-14 * std::abs(cur);
        prev = cur;
        if (done) break;
    }
    return prev;
}

}  // namespace

double arg_gamma_one_plus_is(double s) {
    if (s == 0.0) return 0.0;
    check_s(s);
    // arg Gamma(1+is) = -euler*s + sum_k [s/k - atan(s/k)], summed until the
    // term falls below 1e-12, plus the Euler-Maclaurin tail of the remainder.
    double total = -kEuler * s;
    double k = 0.0, term;
    do {
        k += 1.0;
        term = s / k - std::atan(s / k);
        total += term;
    } while (term > 1e-12 && k < 5e6);
    // integral_k^inf [s/u - atan(s/u)] du = -s - s ln k + k atan(s/k)
    //                                       + (s/2) ln(k^2+s^2)
    total += -s - s * std::log(k) + k * std::atan(s / k) +
             0.5 * s * std::log(k * k + s * s) - 0.5 * term;
    return total;
}

double besselk_amplitude(double s) {
    check_s(s);
    return std::sqrt(kPi / (s * std::sinh(kPi * s)));
}

PhaseForm phase_form(double s) {
    return {s, besselk_amplitude(s), arg_gamma_one_plus_is(s)};
}

namespace {
// Repeated evaluations at one order dominate (zero scans, spectra); cache the
// order-dependent constants.
struct OrderCache {
    double s = -1.0;
    double phi0 = 0.0;
    double amp = 0.0;
};
thread_local OrderCache g_order;

void load_order(double s) {
    if (g_order.s != s) {
        g_order.phi0 = arg_gamma_one_plus_is(s);
        g_order.amp = besselk_amplitude(s);
        g_order.s = s;
    }
}
}  // namespace

KEval besselk_imag_ex(double s, double x) {
    check_s(s);
    if (!(x > 0.0)) raise(errc::domain, "argument x must be positive");
    if (x <= x_switch(s)) {
        load_order(s);
        return {series_value(s, x, g_order.phi0, g_order.amp), false};
    }
    if (x >= 740.0) return {0.0, true};  // exp(-x) below the double range
    return {std::exp(-x) * scaled_tail_integral(s, x), false};
}

double besselk_imag(double s, double x) { return besselk_imag_ex(s, x).value; }

double besselk_phase(double s, double x) {
    check_s(s);
    if (!(x > 0.0)) raise(errc::domain, "argument x must be positive");
    load_order(s);
    return g_order.amp * std::sin(s * std::log(2.0 / x) + g_order.phi0);
}

double besselk_phase_window(double s) {
    check_s(s);
    return 0.1 * std::min(1.0, 1.0 / s);
}

std::vector<double> besselk_zeros(double s, double x_lo, double x_hi) {
    check_s(s);
    if (!(x_lo > 0.0) || !(x_hi > x_lo))
        raise(errc::invalid_argument, "zero search needs 0 < x_lo < x_hi");

    // No zeros beyond the oscillatory region; clip the scan there.
    const double osc_edge = std::sqrt(s * s + 0.25) + 1.0;
    const double hi = std::min(x_hi, osc_edge);
    std::vector<double> zeros;
    if (hi <= x_lo) return zeros;

    load_order(s);
    auto f = [&](double x) { return series_value(s, x, g_order.phi0, g_order.amp); };

    // 64 scan points per expected log-period pi/s.
    const double step = std::exp(kPi / (64.0 * s));
    double xa = x_lo;
    double fa = f(xa);
    while (xa < hi) {
        double xb = std::min(xa * step, hi);
        double fb = f(xb);
        if (fa == 0.0) {
            zeros.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            for (int it = 0; it < 80; ++it) {
                const double m = std::sqrt(a * b);
                const double vm = f(m);
                if (vm == 0.0) {
                    a = b = m;
                    break;
                }
                if (va * vm < 0.0)
                    b = m;
                else {
                    a = m;
                    va = vm;
                }
                if (b - a <= 1e-12 * b) break;
            }
            zeros.push_back(std::sqrt(a * b));
        }
        if (xb >= hi) break;
        xa = xb;
        fa = fb;
    }
    return zeros;
}

}  // namespace hhl
