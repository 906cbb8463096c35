/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hhl {

namespace {
constexpr double kPi = std::numbers::pi;
}

EnergyLadder trimer_ladder(double b3_ground, const ScalingFactor& s0, int n_max) {
    if (!(b3_ground > 0.0)) raise(errc::domain, "B3 ground binding must be positive");
    if (!(s0.s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    if (n_max < 0) raise(errc::invalid_argument, "n_max must be >= 0");
    EnergyLadder l;
    l.method = LadderMethod::geometric;
    l.s = s0.s;
    for (int n = 0; n <= n_max; ++n) {
        l.levels.push_back(b3_ground * std::exp(-2.0 * n * kPi / s0.s));
        l.node_counts.push_back(n);
    }
    return l;
}

EnergyLadder attached_ladder(double parent_B, const ScalingFactor& sN, double b_top,
                             CutoffRule rule, int n_max) {
    if (!(parent_B >= 0.0)) raise(errc::invalid_argument, "parent binding must be >= 0");
    if (!(b_top > 0.0)) raise(errc::domain, "ladder head must be positive");
    if (!(sN.s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    if (n_max < 0) raise(errc::invalid_argument, "n_max must be >= 0");

    EnergyLadder l;
    l.method = LadderMethod::geometric;
    l.s = sN.s;
    for (int n = 0; n <= n_max; ++n) {
        const double B = b_top * std::exp(-2.0 * n * kPi / sN.s);
        if (rule == CutoffRule::parent_threshold && B <= parent_B) break;
        l.levels.push_back(B);
        l.node_counts.push_back(n);
    }
    return l;
}

int intermediate_state_count(double s_minor, double s_major) {
    if (!(s_minor > 0.0) || !(s_major >= s_minor))
        raise(errc::invalid_argument, "need 0 < s_minor <= s_major");
    return static_cast<int>(std::floor(s_major / s_minor + 1e-12));
}

InterwovenSpectrum interwoven_spectrum(double mass_ratio, double b3_ground,
                                       const InterwovenConfig& config) {
    if (!(b3_ground > 0.0)) raise(errc::domain, "B3 ground binding must be positive");
    if (config.trimer_levels < 1 || config.max_levels_per_ladder < 1)
        raise(errc::invalid_argument, "level counts must be >= 1");
    if (config.max_n_bosons < 4)
        raise(errc::invalid_argument, "max_n_bosons must be >= 4");
    if (!(config.head_margin > 0.0))
        raise(errc::invalid_argument, "head margin must be positive");

    InterwovenSpectrum sp;
    sp.mass_ratio = mass_ratio;
    sp.s0 = resolve_s0(mass_ratio);
    sp.trimer = trimer_ladder(b3_ground, sp.s0, config.trimer_levels - 1);
    for (int N = 4; N <= config.max_n_bosons; ++N)
        sp.s_n.push_back(hybrid_s(sp.s0.s, N));

    const ScalingFactor& s4 = sp.s_n.front();
    const double r4 = geometric_ratio(s4.s);
    for (int j = 0; j < static_cast<int>(sp.trimer.levels.size()); ++j) {
        const double parent = sp.trimer.levels[j];
        double head = parent * r4 * config.head_margin;
        if (j == 0 && config.ground_head > 0.0) head = config.ground_head;
        AttachedLadder al;
        al.parent_level = j;
        al.parent_B = parent;
        al.ladder = attached_ladder(parent, s4, head, CutoffRule::parent_threshold,
                                    config.max_levels_per_ladder - 1);
        sp.tetramer.push_back(std::move(al));
    }

    // N >= 5: single (N-1)+1 threshold; the deepest (N-1)-body level is the
    // smallest subsystem and truncates the ladder.
    double parent = sp.tetramer.empty() || sp.tetramer.front().ladder.levels.empty()
                        ? 0.0
                        : sp.tetramer.front().ladder.levels.front();
    for (int N = 5; N <= config.max_n_bosons && parent > 0.0; ++N) {
        const ScalingFactor& sN = sp.s_n[N - 4];
        const double head = parent * geometric_ratio(sN.s) * config.head_margin;
        AttachedLadder al;
        al.parent_level = 0;
        al.parent_B = parent;
        al.ladder = attached_ladder(parent, sN, head, CutoffRule::parent_threshold,
                                    config.max_levels_per_ladder - 1);
        sp.higher.emplace_back(N, al);
        parent = al.ladder.levels.empty() ? 0.0 : al.ladder.levels.front();
    }

    // Ordering constraints of the assembled spectrum.
    const double r3 = geometric_ratio(sp.s0.s);
    for (size_t j = 1; j < sp.trimer.levels.size(); ++j) {
        const double got = sp.trimer.levels[j - 1] / sp.trimer.levels[j];
        if (std::abs(got / r3 - 1.0) > 1e-12)
            raise(errc::constraint_violation,
                  "trimer thresholds not spaced by e^{2 pi/s0}");
    }
    for (const auto& al : sp.tetramer) {
        for (double B : al.ladder.levels)
            if (!(B > al.parent_B))
                raise(errc::constraint_violation,
                      "tetramer level B4," + std::to_string(al.parent_level) +
                          " <= parent threshold B3^(" +
                          std::to_string(al.parent_level) + ")");
    }
    for (size_t j = 1; j < sp.tetramer.size(); ++j) {
        const auto& a = sp.tetramer[j - 1].ladder.levels;
        const auto& b = sp.tetramer[j].ladder.levels;
        if (!a.empty() && !b.empty() && !(a.front() > b.front()))
            raise(errc::constraint_violation,
                  "tetramer ladder heads not ordered with their parents");
    }
    for (size_t k = 1; k < sp.s_n.size(); ++k)
        if (!(sp.s_n[k].s > sp.s_n[k - 1].s))
            raise(errc::constraint_violation, "s_N must increase with N");
    return sp;
}

ScalingCurve scaling_curve(double mass_ratio, int n_bosons, double r_short,
                           std::span<const double> rc_list) {
    if (n_bosons < 3) raise(errc::invalid_argument, "n_bosons must be >= 3");
    if (!(r_short > 0.0)) raise(errc::domain, "r_short must be positive");
    if (rc_list.empty()) raise(errc::invalid_argument, "empty cutoff list");

    const ScalingFactor s0 = resolve_s0(mass_ratio);
    const ScalingFactor sN = n_bosons == 3 ? s0 : hybrid_s(s0.s, n_bosons);

    ScalingCurve curve;
    curve.n_bosons = n_bosons;
    curve.parent_level = 0;
    curve.s = sN.s;
    curve.fixed_point = geometric_ratio(sN.s);

    const double rc_min = r_short * std::exp(3.0 * kPi / sN.s);
    for (double rc : rc_list) {
        if (!(rc > rc_min)) {
            curve.skipped_rc.push_back(rc);
            continue;
        }
        auto problem = RadialProblem::unitary(sN.s * sN.s + 0.25, {r_short, rc});
        const int total = total_level_count(problem);
        if (total < 3) {
            curve.skipped_rc.push_back(rc);
            continue;
        }
        // Middle of the ladder: short-range corrections fade with depth below
        // the wall levels, cutoff corrections with height above the deepest
        // ones, so the central triple is the converged one and drifts toward
        // the fixed point as the cutoff grows.
        const int k = (total - 3) / 2;
        const double b0 = level_by_index(problem, k);
        const double b1 = level_by_index(problem, k + 1);
        const double b2 = level_by_index(problem, k + 2);
        curve.points.push_back({rc, b0 / b1, b1 / b2, k});
    }
    if (curve.points.empty())
        raise(errc::insufficient_levels,
              "no cutoff in the list supports three levels");
    return curve;
}

RatioTable ratio_table(std::span<const double> mass_ratios, int n_max) {
    if (n_max < 3) raise(errc::invalid_argument, "n_max must be >= 3");
    if (mass_ratios.empty()) raise(errc::invalid_argument, "empty mass-ratio list");
    RatioTable t;
    t.n_max = n_max;
    for (double A : mass_ratios) {
        t.mass_ratios.push_back(A);
        t.s0.push_back(reference_s0_or_throw(A));
    }
    for (int N = 3; N <= n_max; ++N) {
        std::vector<double> row;
        for (double s0 : t.s0) {
            const double s = N == 3 ? s0 : hybrid_s(s0, N).s;
            row.push_back(geometric_ratio(s));
        }
        t.ratios.push_back(std::move(row));
    }
    return t;
}

}  // namespace hhl
