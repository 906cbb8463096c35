/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_ADIABATIC_HPP
#define HHL_ADIABATIC_HPP

#include <cmath>
#include <span>
#include <vector>

#include "hhl/errors.hpp"

namespace hhl {

// Heavy-light scattering length.  Unitarity (|a| -> infinity) is an explicit
// state rather than a large float, so 1/a never suffers cancellation.
class ScatteringLength {
public:
    static ScatteringLength unitary() { return ScatteringLength(0.0, true); }
    static ScatteringLength finite(double a) {
        if (a == 0.0 || !std::isfinite(a))
            raise(errc::invalid_argument, "scattering length must be finite and nonzero");
        return ScatteringLength(a, false);
    }

    bool is_unitary() const { return unitary_; }
    double value() const {
        if (unitary_) raise(errc::invalid_argument, "scattering length is unitary");
        return a_;
    }
    // 1/a, with the unitary limit mapped to 0.
    double inverse() const { return unitary_ ? 0.0 : 1.0 / a_; }

private:
    ScatteringLength(double a, bool u) : a_(a), unitary_(u) {}
    double a_;
    bool unitary_;
};

// Physical configuration.  Units: hbar = m_alpha = 1, lengths in units of the
// caller's short-range cutoff; energies are inverse lengths squared.
struct SystemParams {
    double mass_ratio = 0.01;  // A = m_beta / m_alpha, 0 < A < 1
    int n_bosons = 3;          // N >= 3
    ScatteringLength a = ScatteringLength::unitary();
    double r_star = 0.0;       // effective-range parameter; 0 = broad resonance
};

void validate(const SystemParams& p);

struct KappaSolution {
    double R = 0.0;
    double kappa = 0.0;
    double residual = 0.0;  // |(kappa - 1/a + R* kappa^2) R - exp(-kappa R)|
};

/// Root of [kappa - 1/a] R = exp(-kappa R).  Throws no_bound_level when
/// a < 0 and R >= |a| (the light-particle level merges with the continuum).
KappaSolution solve_kappa(double R, const ScatteringLength& a);

/// Root of [kappa - 1/a + R* kappa^2] R = exp(-kappa R); reduces to
/// solve_kappa when r_star == 0 (same code path).
KappaSolution solve_kappa_narrow(double R, const ScatteringLength& a, double r_star);

/// Fitted form kappa(R) ~ 1/a + (g/R + eps/a) exp(-R/a), a > 0.
double kappa_closed_form(double R, double a, double epsilon);

/// Least-squares eps over the grid, minimising the dimensionless residual
/// (kappa_closed - kappa_exact) R.  Throws on an ill-conditioned grid
/// (the eps term decays away for R >> a).
double fit_epsilon(double a, std::span<const double> grid);

/// 50 log-spaced points on [0.1 a, 10 a].
std::vector<double> default_epsilon_grid(double a);

/// 2 g (1 + eps - g): coefficient of the subleading 1/(R a) term obtained by
/// squaring the fitted kappa at R << a.
double coulomb_coefficient(double gamma, double epsilon);

/// nu = mu_{(2a)b} / m_beta = 2 / (2 + A).
double nu_of(double mass_ratio);

/// E_{N-2}(R) = -(N-2) kappa(R)^2 / nu.  Exact root, not the fitted form.
double effective_potential(const SystemParams& p, double R);

struct PotentialProfile {
    std::vector<double> grid;    // strictly increasing R
    std::vector<double> values;  // E_{N-2}(R)
    double threshold = 0.0;      // R -> infinity limit
    double merge_radius = std::numeric_limits<double>::quiet_NaN();  // |a| for a < 0
};

/// Tabulates the effective potential.  For a < 0 the profile stops at
/// R = |a| and merge_radius reports where the level met the continuum.
PotentialProfile potential_profile(const SystemParams& p, std::span<const double> grid);

/// Log-spaced grid helper, n >= 2 points on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace hhl

#endif
