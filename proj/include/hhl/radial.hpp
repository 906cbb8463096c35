/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_RADIAL_HPP
#define HHL_RADIAL_HPP

#include <limits>
#include <vector>

#include "hhl/adiabatic.hpp"
#include "hhl/constants.hpp"
#include "hhl/errors.hpp"

namespace hhl {

// Reduced radial problem  u'' + [(s^2 + 1/4)/R^2 - B] u = 0  between a hard
// wall at r_short and a long-range cutoff r_long, integrated as
// w'' + [s^2 - B e^{2x}] w = 0 in x = ln R (u = e^{x/2} w).  Tabulated
// potential profiles are supported through the same transform.

struct BoundaryConditions {
    double r_short = 1.0;
    double r_long = 1e3;
};

enum class LadderMethod { numerov, fd_oracle, bessel_analytic, geometric };

const char* to_string(LadderMethod m);

struct EnergyLadder {
    std::vector<double> levels;   // B^(n), strictly decreasing, all > 0
    std::vector<int> node_counts; // node_counts[n] == n
    LadderMethod method = LadderMethod::numerov;
    double s = std::numeric_limits<double>::quiet_NaN();
    double r_short = std::numeric_limits<double>::quiet_NaN();
    double r_long = std::numeric_limits<double>::quiet_NaN();  // NaN: semi-infinite
};

class RadialProblem {
public:
    /// Unitary-limit problem with 1/R^2 strength coefficient (s^2 + 1/4).
    static RadialProblem unitary(double strength, BoundaryConditions bc);

    /// Problem over a tabulated E_{N-2}(R) profile.  The profile values are
    /// light-particle energies in units hbar^2/(2 m_beta); dividing by 2A
    /// converts them to the B scale (hbar^2/m_alpha) of the heavy-heavy
    /// radial equation.
    static RadialProblem from_profile(const PotentialProfile& profile,
                                      double mass_ratio, BoundaryConditions bc);

    const BoundaryConditions& bc() const { return bc_; }
    double x_short() const { return x0_; }
    double x_long() const { return x1_; }

    // w'' + q(x, B) w = 0
    double q(double x, double B) const;
    // effective s for grid-resolution choices
    double s_scale() const;
    bool is_strength_form() const { return profile_w_.empty(); }
    double strength() const { return strength_; }

private:
    RadialProblem() = default;
    BoundaryConditions bc_;
    double x0_ = 0.0, x1_ = 0.0;
    double strength_ = 0.0;              // s^2 + 1/4 (strength form)
    std::vector<double> profile_x_;      // ln R samples (profile form)
    std::vector<double> profile_w_;      // E(R) R^2 / (2A) samples
    double threshold_b_ = 0.0;           // E(inf) / (2A)
};

/// Interior nodes of the outward solution (u = 0, u' = 1 at r_short) at
/// trial binding B.  Equals the number of levels bound more deeply than B.
int numerov_count_nodes(const RadialProblem& problem, double B);

/// Total number of bound levels (B > 0) supported by the box.
int total_level_count(const RadialProblem& problem);

/// Binding of the n-th level (n = 0 deepest), by node-count bisection and
/// secant refinement of the two-sided matching determinant.
/// Throws insufficient_levels when the spectrum holds fewer levels.
double level_by_index(const RadialProblem& problem, int n);

/// The max_levels deepest levels; fewer if the spectrum is exhausted.
EnergyLadder bound_states(const RadialProblem& problem, int max_levels);

/// Eq.-(12)-type box spectrum for a given scaling factor.
EnergyLadder unitary_box_spectrum(const ScalingFactor& s, BoundaryConditions bc,
                                  int max_levels);

/// Semi-infinite spectrum from the zeros of K_{is}: B^(n) = (x_n / r_short)^2
/// with x_n the n-th largest zero.
EnergyLadder bessel_spectrum(const ScalingFactor& s, double r_short, int max_levels);

/// Independent oracle: second-order finite differences on the same log grid,
/// solved as a symmetric tridiagonal eigenproblem (LAPACK).  grid_size >= 200
/// interior points; eigenvalue error falls as grid_size^-2.
EnergyLadder fd_oracle(const RadialProblem& problem, int grid_size);

}  // namespace hhl

#endif
