/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_CONSTANTS_HPP
#define HHL_CONSTANTS_HPP

#include <optional>
#include <span>

#include "hhl/errors.hpp"

namespace hhl {

/// Unique positive fixed point of x = exp(-x), good to >= 12 significant
/// digits.  Fixes the strength of the unitary-limit 1/R^2 tail.
double omega_constant();

enum class SSource { adiabatic, exact_reference, hybrid };

const char* to_string(SSource s);

// Strength parameter of the attractive 1/R^2 potential for N bosons.
// Adjacent bound states differ by the geometric ratio e^{2 pi / s}.
struct ScalingFactor {
    double s = 0.0;
    int n_bosons = 3;
    SSource source = SSource::adiabatic;
};

/// s_N(A) = sqrt((2+A)/(4A) (N-2) g^2 - 1/4) with g the omega constant.
/// Requires 0 < A < 1 (two heavy particles binding N-2 light ones) and N >= 3.
ScalingFactor adiabatic_s(double mass_ratio, int n_bosons);

/// s_N^2 = (N-2) s0^2 + (N-3)/4.  N = 3 returns s0 unchanged.
ScalingFactor hybrid_s(double s0, int n_bosons);

/// e^{pi/s} when half is set, e^{2 pi/s} otherwise.
double geometric_ratio(double s, bool half = false);

/// floor((s/pi) ln(|a|/r1)), clamped at zero.  Number of three-body levels
/// supported between the short-range wall r1 and the scattering length.
int trimer_level_count(double a_abs, double r1, double s);

/// floor(-(s4/pi) ln(sqrt(B3) r2)), clamped at zero.  Number of four-body
/// levels below a parent three-body state of binding B3.
int tetramer_level_count(double b3_ground, double r2, double s4);

// Reference (non-adiabatic) three-body scaling factors for tabulated mass
// ratios.  Values are carried verbatim; no interpolation is offered.
std::optional<double> reference_s0(double mass_ratio);
double reference_s0_or_throw(double mass_ratio);
std::span<const double> reference_mass_ratios();

/// Reference s0 when the mass ratio is tabulated, adiabatic s3 otherwise.
/// The source tag records which one was taken.
ScalingFactor resolve_s0(double mass_ratio);

}  // namespace hhl

#endif
