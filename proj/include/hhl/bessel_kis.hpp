/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_BESSEL_KIS_HPP
#define HHL_BESSEL_KIS_HPP

#include <vector>

#include "hhl/errors.hpp"

namespace hhl {

// K_{is}(x): modified Bessel function of the second kind with pure imaginary
// order.  Real-valued for s, x real; oscillates log-periodically for x << s
// and decays monotonically for x >> s.  Its zeros carry the geometric
// three-body spectrum.

/// arg Gamma(1 + i s) summed along the continuous branch; may differ from the
/// principal value by a multiple of 2 pi (irrelevant under sin/cos).
double arg_gamma_one_plus_is(double s);

/// sqrt(pi / (s sinh(pi s))): modulus of the small-x oscillation of K_{is}.
double besselk_amplitude(double s);

struct PhaseForm {
    double s;
    double amplitude_ref;  // besselk_amplitude(s)
    double phase_offset;   // arg Gamma(1 + i s)
};

PhaseForm phase_form(double s);

struct KEval {
    double value;
    bool underflow;  // true when the result underflowed to an exact zero
};

/// K_{is}(x) for s in (0, 200], x > 0.  Power series in the oscillatory
/// region (the sinh(pi s) scale is factored out analytically, so accuracy is
/// relative to the local amplitude even where the function is ~1e-13);
/// trapezoidal evaluation of the cosh-integral representation in the
/// monotone tail.
KEval besselk_imag_ex(double s, double x);
double besselk_imag(double s, double x);

/// Leading small-x form A(s) sin(s ln(2/x) + arg Gamma(1+is)).  Valid for
/// x below roughly besselk_phase_window(s); zeros are spaced by e^{pi/s}.
double besselk_phase(double s, double x);

/// Recommended upper x for the phase form (relative error ~ x^2 / s beyond).
double besselk_phase_window(double s);

/// All zeros of K_{is} in [x_lo, x_hi], ascending, each to ~1e-10 relative.
/// Sign-change scan on a log grid (64 points per pi/s period), then bisection.
std::vector<double> besselk_zeros(double s, double x_lo, double x_hi);

}  // namespace hhl

#endif
