/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hhl/constants.hpp"

namespace hhl {

namespace {

// Root of xi - c * exp(-xi) = 0 for c > 0 (monotone increasing LHS).
// Bracketed bisection to ~1e-13 relative, then Newton polish.
double solve_xi(double c, double lo, double hi) {
    auto f = [&](double xi) { return xi - c * std::exp(-xi); };
    for (int it = 0; it < 90; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * std::max(1.0, std::abs(hi))) break;
    }
    double xi = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double e = c * std::exp(-xi);
        xi -= (xi - e) / (1.0 + e);
    }
    return xi;
}

}  // namespace

void validate(const SystemParams& p) {
    if (!(p.mass_ratio > 0.0) || !(p.mass_ratio < 1.0))
        raise(errc::domain, "mass ratio must satisfy 0 < A < 1");
    if (p.n_bosons < 3) raise(errc::invalid_argument, "n_bosons must be >= 3");
    if (!(p.r_star >= 0.0)) raise(errc::invalid_argument, "r_star must be >= 0");
}

KappaSolution solve_kappa(double R, const ScatteringLength& a) {
    if (!(R > 0.0)) raise(errc::domain, "R must be positive");

    // Work in xi = (kappa - 1/a) R:  xi exp(xi) = exp(-R/a).  This keeps
    // kappa - 1/a exact where kappa approaches 1/a (R >> a).
    const double t = a.is_unitary() ? 0.0 : R / a.value();  // R/a, signed
    if (!a.is_unitary() && a.value() < 0.0 && R >= -a.value())
        raise(errc::no_bound_level,
              "no light-particle level for R >= |a| (merge radius |a| = " +
                  std::to_string(-a.value()) + ")");

    const double c = std::exp(-t);
    const double g1 = 1.0 + omega_constant();
    double lo = 0.0, hi = g1;
    if (t < 0.0) {
        lo = -t;          // kappa > 0 requires xi > R/|a|
        hi = g1 - t;
    }
    const double xi = solve_xi(c, lo, hi);

    KappaSolution sol;
    sol.R = R;
    if (a.is_unitary())
        sol.kappa = xi / R;
    else if (a.value() > 0.0)
        sol.kappa = 1.0 / a.value() + xi / R;
    else
        sol.kappa = (xi + t) / R;  // t = -R/|a|; difference computed first
    sol.residual = std::abs(xi - c * std::exp(-xi));
    return sol;
}

KappaSolution solve_kappa_narrow(double R, const ScatteringLength& a, double r_star) {
    if (!(r_star >= 0.0)) raise(errc::invalid_argument, "r_star must be >= 0");
    if (r_star == 0.0) return solve_kappa(R, a);
    if (!(R > 0.0)) raise(errc::domain, "R must be positive");

    const double inv_a = a.inverse();
    if (!a.is_unitary() && a.value() < 0.0 && R >= -a.value())
        raise(errc::no_bound_level,
              "no light-particle level for R >= |a| (merge radius |a| = " +
                  std::to_string(-a.value()) + ")");

    auto f = [&](double k) {
        return (k - inv_a + r_star * k * k) * R - std::exp(-k * R);
    };
    double lo = 0.0;
    double hi = (1.0 + omega_constant()) / R + std::max(0.0, inv_a);
    // f is monotone for k >= 0 and f(lo) < 0 whenever a level exists.
    while (f(hi) <= 0.0) hi *= 2.0;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-14 * hi) break;
    }
    double k = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double fp = R * (1.0 + 2.0 * r_star * k) + R * std::exp(-k * R);
        k -= f(k) / fp;
    }
    return {R, k, std::abs(f(k))};
}

double kappa_closed_form(double R, double a, double epsilon) {
    if (!(R > 0.0) || !(a > 0.0)) raise(errc::domain, "R and a must be positive");
    const double g = omega_constant();
    return 1.0 / a + (g / R + epsilon / a) * std::exp(-R / a);
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        raise(errc::invalid_argument, "log grid needs 0 < lo < hi and n >= 2");
    std::vector<double> g(n);
    const double f = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(f * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> default_epsilon_grid(double a) {
    if (!(a > 0.0)) raise(errc::domain, "a must be positive");
    return log_grid(0.1 * a, 10.0 * a, 50);
}

double fit_epsilon(double a, std::span<const double> grid) {
    if (!(a > 0.0)) raise(errc::domain, "a must be positive");
    if (grid.empty()) raise(errc::invalid_argument, "empty fitting grid");
    const double g = omega_constant();
    // kappa_closed - kappa_exact is linear in eps; least squares on the
    // dimensionless residual (kappa_closed - kappa_exact) R.
    double num = 0.0, den = 0.0;
    for (double R : grid) {
        if (!(R > 0.0)) raise(errc::domain, "grid points must be positive");
        const double w = std::exp(-R / a) * R / a;
        const double ke = solve_kappa(R, ScatteringLength::finite(a)).kappa;
        const double d = (ke - 1.0 / a - (g / R) * std::exp(-R / a)) * R;
        num += w * d;
        den += w * w;
    }
    if (!(den > 1e-240))
        raise(errc::domain,
              "ill-conditioned epsilon fit: the fitted term vanishes on this grid");
    return num / den;
}

double coulomb_coefficient(double gamma, double epsilon) {
    return 2.0 * gamma * (1.0 + epsilon - gamma);
}

double nu_of(double mass_ratio) {
    if (!(mass_ratio > 0.0) || !(mass_ratio < 1.0))
        raise(errc::domain, "mass ratio must satisfy 0 < A < 1");
    return 2.0 / (2.0 + mass_ratio);
}

double effective_potential(const SystemParams& p, double R) {
    validate(p);
    const auto sol = p.r_star > 0.0 ? solve_kappa_narrow(R, p.a, p.r_star)
                                    : solve_kappa(R, p.a);
    const double nu = nu_of(p.mass_ratio);
    return -(p.n_bosons - 2) * sol.kappa * sol.kappa / nu;
}

PotentialProfile potential_profile(const SystemParams& p, std::span<const double> grid) {
    validate(p);
    if (grid.empty()) raise(errc::invalid_argument, "empty grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) raise(errc::domain, "grid points must be positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            raise(errc::invalid_argument, "grid must be strictly increasing");
    }

    PotentialProfile out;
    const double nu = nu_of(p.mass_ratio);
    const bool attractive_dimer = !p.a.is_unitary() && p.a.value() > 0.0;
    out.threshold = attractive_dimer
                        ? -(p.n_bosons - 2) / (nu * p.a.value() * p.a.value())
                        : 0.0;
    const bool virtual_side = !p.a.is_unitary() && p.a.value() < 0.0;
    if (virtual_side) out.merge_radius = -p.a.value();

    out.grid.reserve(grid.size());
    out.values.reserve(grid.size());
    for (double R : grid) {
        if (virtual_side && R >= out.merge_radius) break;  // level met the continuum
        out.grid.push_back(R);
        out.values.push_back(effective_potential(p, R));
    }
    if (out.grid.empty())
        raise(errc::no_bound_level, "profile grid lies entirely beyond the merge radius");
    return out;
}

}  // namespace hhl
