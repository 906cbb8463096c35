/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_SPECTRUM_HPP
#define HHL_SPECTRUM_HPP

#include <span>
#include <utility>
#include <vector>

#include "hhl/constants.hpp"
#include "hhl/radial.hpp"

namespace hhl {

// Interwoven N-body spectra: geometric ladders attached below each parent
// level, truncated where they fall into the parent threshold, plus the
// universal scaling functions G_N with fixed points e^{2 pi / s_N}.

/// Closed-form three-body ladder B3^(n) = e^{-2 n pi / s0} B3^(0),
/// n = 0..n_max inclusive.
EnergyLadder trimer_ladder(double b3_ground, const ScalingFactor& s0, int n_max);

enum class CutoffRule {
    parent_threshold,  // drop levels with B <= parent binding
    none,              // cap only by n_max
};

/// Geometric ladder descending from b_top with ratio e^{2 pi / sN},
/// truncated at the parent threshold (levels with B <= parent_B are cut).
/// Empty when b_top <= parent_B under the parent_threshold rule.
EnergyLadder attached_ladder(double parent_B, const ScalingFactor& sN, double b_top,
                             CutoffRule rule, int n_max);

/// Maximum number of N-body levels strictly between two adjacent
/// (N-1)-body levels: floor(s_major / s_minor).
int intermediate_state_count(double s_minor, double s_major);

struct InterwovenConfig {
    int trimer_levels = 4;          // trimer ladder length
    int max_levels_per_ladder = 8;  // cap for attached ladders
    double head_margin = 1.0;       // head = parent_B * e^{2 pi/sN} * margin
    double ground_head = 0.0;       // explicit head for the n3 = 0 ladder; 0 = margin rule
    int max_n_bosons = 4;           // assemble ladders for N = 4..max_n_bosons
};

struct AttachedLadder {
    int parent_level = 0;   // index of the parent level
    double parent_B = 0.0;  // threshold (parent binding)
    EnergyLadder ladder;
};

struct InterwovenSpectrum {
    double mass_ratio = 0.0;
    ScalingFactor s0;
    std::vector<ScalingFactor> s_n;        // s_4 .. s_{max_n_bosons}
    EnergyLadder trimer;
    std::vector<AttachedLadder> tetramer;  // one per trimer level
    // For N >= 5, the (N-1)+1 single-threshold scenario: one ladder below the
    // deepest (N-1)-body level.
    std::vector<std::pair<int, AttachedLadder>> higher;
};

/// Assembles the interwoven spectrum and validates the ordering constraints
/// (ladders nested above their parent thresholds, thresholds spaced by the
/// parent geometric ratio).  Throws constraint_violation naming the failed
/// inequality.
InterwovenSpectrum interwoven_spectrum(double mass_ratio, double b3_ground,
                                       const InterwovenConfig& config);

struct ScalingCurvePoint {
    double rc = 0.0;
    double X = 0.0;  // B^(n) / B^(n+1)
    double Y = 0.0;  // B^(n+1) / B^(n+2)
    int level_index = 0;  // n
};

struct ScalingCurve {
    int n_bosons = 4;
    int parent_level = 0;
    double s = 0.0;
    double fixed_point = 0.0;  // e^{2 pi / s_N}
    std::vector<ScalingCurvePoint> points;
    std::vector<double> skipped_rc;  // cutoffs with fewer than 3 levels
};

/// Solves the unitary box problem at each cutoff and emits the ratio pair
/// (X, Y) of three consecutive levels taken from the middle of the spectrum,
/// where both the short-range and the cutoff corrections are smallest; the
/// sequence converges to the fixed point as the cutoff grows.
ScalingCurve scaling_curve(double mass_ratio, int n_bosons, double r_short,
                           std::span<const double> rc_list);

struct RatioTable {
    std::vector<double> mass_ratios;
    std::vector<double> s0;                      // reference values
    std::vector<std::vector<double>> ratios;     // rows N = 3..n_max of e^{2 pi/s_N}
    int n_max = 6;
};

/// Rows s0 and e^{2 pi / s_N}, N = 3..n_max, using the reference s0.
/// Throws no_reference for a mass ratio outside the table.
RatioTable ratio_table(std::span<const double> mass_ratios, int n_max);

}  // namespace hhl

#endif
