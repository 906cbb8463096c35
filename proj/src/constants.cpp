/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hhl {

namespace {

constexpr double kPi = std::numbers::pi;

double compute_omega() {
    // Safeguarded Newton on f(x) = x - exp(-x) over [0.5, 0.6]:
    // f(0.5) < 0 < f(0.6), f' = 1 + exp(-x) > 1.
    double lo = 0.5, hi = 0.6;
    double x = 0.567;
    for (int it = 0; it < 60; ++it) {
        const double ex = std::exp(-x);
        const double f = x - ex;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        double next = x - f / (1.0 + ex);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 2e-17 * x) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

struct S0Entry {
    double mass_ratio;
    double s0;
};

// Non-adiabatic three-body scaling factors at the tabulated mass ratios
// (reference values; carried verbatim, never interpolated).
constexpr std::array<S0Entry, 7> kS0Table = {{
    {0.1, 1.4682},
    {0.05, 1.9194},
    {0.04, 2.1142},
    {0.03, 2.4067},
    {0.02, 2.9084},
    {0.01, 4.0612},
    {0.001, 12.698},
}};

constexpr std::array<double, 7> kS0MassRatios = {0.1, 0.05, 0.04, 0.03,
                                                 0.02, 0.01, 0.001};

bool close_key(double a, double key) {
    return std::abs(a - key) <= 1e-12 + 1e-9 * key;
}

// Guard against floor() dropping an exact quantum to n-1 by a rounding ulp.
int floor_count(double x) {
    if (!(x > 0.0)) return 0;
    return static_cast<int>(std::floor(x + 1e-9));
}

}  // namespace

double omega_constant() {
    static const double value = compute_omega();
    return value;
}

const char* to_string(SSource s) {
    switch (s) {
        case SSource::adiabatic: return "adiabatic";
        case SSource::exact_reference: return "exact_reference";
        case SSource::hybrid: return "hybrid";
    }
    return "?";
}

ScalingFactor adiabatic_s(double mass_ratio, int n_bosons) {
    if (!(mass_ratio > 0.0) || !(mass_ratio < 1.0))
        raise(errc::domain, "mass ratio must satisfy 0 < A < 1");
    if (n_bosons < 3) raise(errc::invalid_argument, "n_bosons must be >= 3");
    const double g = omega_constant();
    const double radicand =
        (2.0 + mass_ratio) / (4.0 * mass_ratio) * (n_bosons - 2) * g * g - 0.25;
    if (!(radicand > 0.0)) raise(errc::domain, "scaling-factor radicand is not positive");
    return {std::sqrt(radicand), n_bosons, SSource::adiabatic};
}

ScalingFactor hybrid_s(double s0, int n_bosons) {
    if (!(s0 > 0.0)) raise(errc::domain, "s0 must be positive");
    if (n_bosons < 3) raise(errc::invalid_argument, "n_bosons must be >= 3");
    if (n_bosons == 3) return {s0, 3, SSource::hybrid};
    const double s =
        std::sqrt((n_bosons - 2) * s0 * s0 + 0.25 * (n_bosons - 3));
    return {s, n_bosons, SSource::hybrid};
}

double geometric_ratio(double s, bool half) {
    if (!(s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    return std::exp((half ? 1.0 : 2.0) * kPi / s);
}

int trimer_level_count(double a_abs, double r1, double s) {
    if (!(a_abs > 0.0) || !(r1 > 0.0)) raise(errc::domain, "lengths must be positive");
    if (!(s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    if (a_abs <= r1) return 0;
    return floor_count(s / kPi * std::log(a_abs / r1));
}

int tetramer_level_count(double b3_ground, double r2, double s4) {
    if (!(b3_ground > 0.0) || !(r2 > 0.0)) raise(errc::domain, "inputs must be positive");
    if (!(s4 > 0.0)) raise(errc::domain, "scaling factor must be positive");
    const double arg = std::sqrt(b3_ground) * r2;
    if (arg >= 1.0) return 0;
    return floor_count(-s4 / kPi * std::log(arg));
}

std::optional<double> reference_s0(double mass_ratio) {
    for (const auto& e : kS0Table)
        if (close_key(mass_ratio, e.mass_ratio)) return e.s0;
    return std::nullopt;
}

double reference_s0_or_throw(double mass_ratio) {
    auto v = reference_s0(mass_ratio);
    if (!v)
        raise(errc::no_reference,
              "mass ratio A = " + std::to_string(mass_ratio) +
                  " is not in the reference s0 table (no interpolation)");
    return *v;
}

std::span<const double> reference_mass_ratios() {
    return {kS0MassRatios.data(), kS0MassRatios.size()};
}

ScalingFactor resolve_s0(double mass_ratio) {
    if (auto v = reference_s0(mass_ratio))
        return {*v, 3, SSource::exact_reference};
    return adiabatic_s(mass_ratio, 3);
}

}  // namespace hhl
