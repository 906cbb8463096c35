/* SPDX-License-Identifier: Apache-2.0 */
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hhl/adiabatic.hpp"
#include "hhl/constants.hpp"
#include "test_util.hpp"

using namespace hhl;
using testutil::rel_diff;

namespace {

// Independent oracle for the unit-scattering-length root: bisection of
// x - 1 = exp(-x) on [1, 2].
double kappa_at_a_bisect() {
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (lo + hi);
        (m - 1.0 - std::exp(-m) < 0.0 ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}

double residual_of(double R, double inv_a, double r_star, double kappa) {
    return std::abs((kappa - inv_a + r_star * kappa * kappa) * R -
                    std::exp(-kappa * R));
}

}  // namespace

TEST_CASE("unitary kappa is gamma/R") {
    const double g = omega_constant();
    for (double R : {1e-6, 0.1, 1.0, 42.0, 1e8}) {
        const auto sol = solve_kappa(R, ScatteringLength::unitary());
        CHECK(rel_diff(sol.kappa, g / R) < 1e-14);
        CHECK(sol.residual < 1e-12);
    }
}

TEST_CASE("kappa at R = a") {
    const double x = kappa_at_a_bisect();
    CHECK(std::abs(x - 1.27846) < 1e-5);  // frozen digits of the oracle
    for (double a : {0.5, 1.0, 7.0}) {
        const auto sol = solve_kappa(a, ScatteringLength::finite(a));
        CHECK(rel_diff(sol.kappa * a, x) < 1e-12);
    }
}

TEST_CASE("virtual-state side: level merges with the continuum at |a|") {
    const auto a = ScatteringLength::finite(-2.0);
    CHECK_THROWS_AS(solve_kappa(2.0, a), Error);
    CHECK_THROWS_AS(solve_kappa(2.5, a), Error);
    try {
        solve_kappa(2.0, a);
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_bound_level);
    }
    // just inside: a tiny positive root
    const auto sol = solve_kappa(2.0 * (1.0 - 1e-9), a);
    CHECK(sol.kappa > 0.0);
    CHECK(sol.kappa < 1e-8);
    CHECK(sol.residual < 1e-12);
}

TEST_CASE("defining-equation residual stays below 1e-12") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const double R = rng.log_uniform(1e-4, 1e4);
        const int kind = rng.uniform_int(0, 2);
        ScatteringLength a = ScatteringLength::unitary();
        if (kind == 1) a = ScatteringLength::finite(rng.log_uniform(1e-3, 1e3));
        if (kind == 2) {
            double av = rng.log_uniform(1e-3, 1e3);
            if (R >= av) continue;
            a = ScatteringLength::finite(-av);
        }
        const auto sol = solve_kappa(R, a);
        CHECK(sol.residual < 1e-12);
        CHECK(residual_of(R, a.inverse(), 0.0, sol.kappa) < 1e-11);
        CHECK(sol.kappa > 0.0);
    }
}

TEST_CASE("large scattering length converges to the unitary form") {
    const double g = omega_constant();
    const double R = 1.0;
    const auto sol = solve_kappa(R, ScatteringLength::finite(1e8 * R * 1.001));
    CHECK(std::abs(sol.kappa * R - g) < 1e-7);
}

TEST_CASE("kappa decreases monotonically toward 1/a") {
    const double a = 2.5;
    auto grid = log_grid(0.01 * a, 40.0 * a, 120);
    double prev = 1e300;
    for (double R : grid) {
        const double k = solve_kappa(R, ScatteringLength::finite(a)).kappa;
        CHECK(k < prev);
        CHECK(k > 1.0 / a);
        prev = k;
    }
    CHECK(rel_diff(prev, 1.0 / a) < 1e-12);
}

TEST_CASE("narrow resonance reduces to the broad equation at r_star = 0") {
    testutil::Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const double R = rng.log_uniform(1e-2, 1e2);
        const auto broad = solve_kappa(R, ScatteringLength::unitary());
        const auto narrow = solve_kappa_narrow(R, ScatteringLength::unitary(), 0.0);
        CHECK(narrow.kappa == broad.kappa);  // same code path
    }
}

TEST_CASE("narrow-resonance asymptotes") {
    // kappa^2 ~ 1/(R R*) deep in the resonance-dominated region, with the
    // first correction 1 - 2 sqrt(R/R*)
    const auto s1 = solve_kappa_narrow(1.0, ScatteringLength::unitary(), 1e6);
    const double k2rr = s1.kappa * s1.kappa * 1.0 * 1e6;
    CHECK(k2rr > 0.995);
    CHECK(k2rr < 1.0);
    CHECK(std::abs(k2rr - (1.0 - 2e-3)) < 1e-4);
    CHECK(s1.residual < 1e-12);

    // R* << R: the 1/R^2 tail is recovered
    const auto s2 = solve_kappa_narrow(1000.0, ScatteringLength::unitary(), 1.0);
    CHECK(std::abs(s2.kappa * 1000.0 - omega_constant()) < 0.01 * omega_constant());

    // finite a with r_star, residual contract
    const auto s3 = solve_kappa_narrow(0.7, ScatteringLength::finite(5.0), 2.0);
    CHECK(residual_of(0.7, 1.0 / 5.0, 2.0, s3.kappa) < 1e-11);
}

TEST_CASE("closed-form kappa") {
    const double g = omega_constant();
    const double a = 3.0;
    // R << a: leading gamma/R
    CHECK(rel_diff(kappa_closed_form(1e-6 * a, a, 0.185), g / (1e-6 * a)) < 1e-5);
    // R >> a: 1/a
    CHECK(rel_diff(kappa_closed_form(40.0 * a, a, 0.185), 1.0 / a) < 1e-10);
    // R = a against the exact root
    const double kc = kappa_closed_form(a, a, 0.185);
    CHECK(std::abs(kc * a - (1.0 + (g + 0.185) * std::exp(-1.0))) < 1e-12);
    const double ke = solve_kappa(a, ScatteringLength::finite(a)).kappa;
    CHECK(rel_diff(kc, ke) < 0.002);
}

TEST_CASE("closed form tracks the exact root to 1% across [0.01a, 100a]") {
    const double a = 1.0;
    for (double R : log_grid(0.01, 100.0, 200)) {
        const double kc = kappa_closed_form(R, a, 0.185);
        const double ke = solve_kappa(R, ScatteringLength::finite(a)).kappa;
        CHECK(rel_diff(kc, ke) < 0.01);
    }
}

TEST_CASE("epsilon fit") {
    const double a = 1.0;
    auto grid = default_epsilon_grid(a);
    REQUIRE(grid.size() == 50);
    CHECK(grid.front() == doctest::Approx(0.1));
    CHECK(grid.back() == doctest::Approx(10.0));

    const double eps = fit_epsilon(a, grid);
    CHECK(eps > 0.180);
    CHECK(eps < 0.190);

    // scale invariance of the fit
    auto grid2 = default_epsilon_grid(7.5);
    CHECK(std::abs(fit_epsilon(7.5, grid2) - eps) < 1e-9);

    // denser window agrees closely
    const double eps2 = fit_epsilon(a, log_grid(0.5, 2.0, 50));
    CHECK(std::abs(eps2 - eps) < 0.01);

    // a single far-out point has no epsilon sensitivity left
    const std::vector<double> far = {600.0};
    CHECK_THROWS_AS(fit_epsilon(a, far), Error);
}

TEST_CASE("coulomb coefficient") {
    const double g = omega_constant();
    CHECK(std::abs(coulomb_coefficient(g, 0.185) - 0.7008) < 1e-3);
    CHECK(coulomb_coefficient(g, g - 1.0) == 0.0);
    // with the fitted epsilon the coefficient stays inside the image of the
    // allowed fit window [0.180, 0.190]
    const double eps = fit_epsilon(1.0, default_epsilon_grid(1.0));
    const double c = coulomb_coefficient(g, eps);
    CHECK(c > coulomb_coefficient(g, 0.180));
    CHECK(c < coulomb_coefficient(g, 0.190));
}

TEST_CASE("effective potential") {
    const double g = omega_constant();
    SystemParams p3{0.01, 3, ScatteringLength::unitary(), 0.0};
    SystemParams p4{0.01, 4, ScatteringLength::unitary(), 0.0};
    const double nu = nu_of(0.01);
    CHECK(nu == doctest::Approx(2.0 / 2.01).epsilon(1e-15));
    for (double R : {0.2, 1.0, 30.0}) {
        const double e3 = effective_potential(p3, R);
        CHECK(rel_diff(e3, -g * g / (nu * R * R)) < 1e-12);
        CHECK(effective_potential(p4, R) == doctest::Approx(2.0 * e3).epsilon(1e-14));
    }
    // dimer threshold at finite a
    SystemParams pf{0.01, 3, ScatteringLength::finite(2.0), 0.0};
    CHECK(rel_diff(effective_potential(pf, 100.0), -1.0 / (nu * 4.0)) < 1e-10);
}

TEST_CASE("potential profile") {
    SystemParams p3{0.02, 3, ScatteringLength::unitary(), 0.0};
    SystemParams p4{0.02, 4, ScatteringLength::unitary(), 0.0};
    auto grid = log_grid(0.1, 100.0, 40);
    auto prof3 = potential_profile(p3, grid);
    auto prof4 = potential_profile(p4, grid);
    REQUIRE(prof3.grid.size() == grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(prof4.values[i] == doctest::Approx(2.0 * prof3.values[i]).epsilon(1e-14));
    CHECK(prof3.threshold == 0.0);
    CHECK(std::isnan(prof3.merge_radius));

    // bound-dimer side: profile rises toward its threshold
    SystemParams pf{0.02, 3, ScatteringLength::finite(1.0), 0.0};
    auto proff = potential_profile(pf, log_grid(0.5, 50.0, 60));
    for (size_t i = 1; i < proff.values.size(); ++i)
        CHECK(proff.values[i] > proff.values[i - 1]);
    CHECK(proff.threshold < 0.0);
    CHECK(proff.values.back() < proff.threshold);  // approaches from below

    // virtual side: profile terminates at |a|
    SystemParams pv{0.02, 3, ScatteringLength::finite(-5.0), 0.0};
    auto profv = potential_profile(pv, log_grid(0.5, 50.0, 60));
    CHECK(profv.merge_radius == 5.0);
    CHECK(profv.grid.back() < 5.0);
    CHECK(profv.threshold == 0.0);
    // grid entirely beyond the merge radius
    CHECK_THROWS_AS(potential_profile(pv, log_grid(6.0, 50.0, 10)), Error);
}
