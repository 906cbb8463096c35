/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <lapacke.h>

#include "hhl/bessel_kis.hpp"

namespace hhl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRescale = 1e250;

struct Grid {
    double x0 = 0.0;
    double h = 0.0;
    int n = 0;  // intervals; points 0..n
    double x(int j) const { return x0 + h * j; }
};

Grid make_grid(const RadialProblem& p) {
    const double L = std::log(p.bc().r_long / p.bc().r_short);
    // Uniform in x = ln R: 2000 points per decade, and at least 16 steps per
    // log-period pi/s of the oscillatory solution.
    const double h_target =
        std::min(std::numbers::ln10 / 2000.0, kPi / (16.0 * p.s_scale()));
    Grid g;
    g.x0 = p.x_short();
    g.n = std::max(16, static_cast<int>(std::ceil(L / h_target)));
    g.h = L / g.n;
    return g;
}

struct SweepResult {
    int nodes = 0;
    double wm = 0.0;   // w at the matching index
    double wm1 = 0.0;  // w at matching index + 1
    double w_end = 0.0;
};

// Outward Numerov sweep from the inner wall (w = 0, w' ~ 1).  Counts interior
// sign changes; captures the pair (w[m], w[m+1]) in one step so the two values
// share the same accumulated rescale.  stop_at_match cuts the sweep after the
// capture (nodes are then partial and must not be used).
SweepResult sweep_out(const RadialProblem& p, const Grid& g, double B, int m,
                      bool stop_at_match) {
    SweepResult r;
    const double h2 = g.h * g.h / 12.0;
    double qm1 = p.q(g.x(0), B);
    double q0 = p.q(g.x(1), B);
    double wprev = 0.0;  // w_0
    double w = g.h;      // w_1 (scale-free start)
    int last_sign = 1;
    const int jmax = stop_at_match ? std::min(m + 1, g.n) : g.n;
    for (int j = 1; j < jmax; ++j) {
        const double q1 = p.q(g.x(j + 1), B);
        const double wnext = (2.0 * w * (1.0 - 5.0 * h2 * q0) -
                              wprev * (1.0 + h2 * qm1)) /
                             (1.0 + h2 * q1);
        wprev = w;
        w = wnext;
        qm1 = q0;
        q0 = q1;
        if (std::abs(w) > kRescale) {
            w /= kRescale;
            wprev /= kRescale;
        }
        if (j + 1 < g.n && w != 0.0) {
            const int sgn = w > 0.0 ? 1 : -1;
            if (sgn != last_sign) ++r.nodes;
            last_sign = sgn;
        }
        if (j + 1 == m + 1) {
            r.wm = wprev;  // w at index m
            r.wm1 = w;     // w at index m+1
        }
    }
    r.w_end = w;
    return r;
}

// Inward sweep from the outer wall; captures (w[m], w[m+1]) in one step.
void sweep_in(const RadialProblem& p, const Grid& g, double B, int m,
              double& wm, double& wm1) {
    const double h2 = g.h * g.h / 12.0;
    double qp1 = p.q(g.x(g.n), B);
    double q0 = p.q(g.x(g.n - 1), B);
    double wnext = 0.0;  // w_n
    double w = g.h;      // w_{n-1}
    for (int j = g.n - 1; j > m; --j) {
        const double qm1 = p.q(g.x(j - 1), B);
        const double wprev = (2.0 * w * (1.0 - 5.0 * h2 * q0) -
                              wnext * (1.0 + h2 * qp1)) /
                             (1.0 + h2 * qm1);
        wnext = w;
        w = wprev;
        qp1 = q0;
        q0 = qm1;
        if (std::abs(w) > kRescale) {
            w /= kRescale;
            wnext /= kRescale;
        }
        if (j - 1 == m) {
            wm = w;       // w at index m
            wm1 = wnext;  // w at index m+1
        }
    }
}

// Matching index: midpoint (in x) of the classically allowed region.  The
// outward sweep stays in oscillation up to the turning point and the inward
// sweep approaches it along its growing direction, so both are well
// conditioned there.
int match_index(const RadialProblem& p, const Grid& g, double B) {
    double xt = g.x(g.n);
    if (p.is_strength_form()) {
        const double c = p.strength() - 0.25;
        if (c > 0.0) {
            const double t = 0.5 * std::log(c / B);
            xt = std::min(xt, t);
        } else {
            xt = g.x0;
        }
    } else {
        int j = g.n;
        while (j > 0 && p.q(g.x(j), B) <= 0.0) --j;
        xt = g.x(j);
    }
    const double xm = 0.5 * (g.x0 + std::max(xt, g.x0));
    int m = static_cast<int>(std::lround((xm - g.x0) / g.h));
    return std::clamp(m, 1, g.n - 2);
}

double match_det(const RadialProblem& p, const Grid& g, double B, int m) {
    SweepResult out = sweep_out(p, g, B, m, true);
    double im = 0.0, im1 = 0.0;
    sweep_in(p, g, B, m, im, im1);
    const double no = std::hypot(out.wm, out.wm1);
    const double ni = std::hypot(im, im1);
    if (no == 0.0 || ni == 0.0) return 0.0;
    return (out.wm * im1 - out.wm1 * im) / (no * ni);
}

int count_nodes(const RadialProblem& p, const Grid& g, double B) {
    return sweep_out(p, g, B, g.n, false).nodes;
}

double b_floor(const RadialProblem& p, const Grid& g) {
    const double c = std::max(p.s_scale() * p.s_scale(), 1e-6);
    return 1e-12 * c * std::exp(-2.0 * g.x(g.n));
}

double b_ceiling(const RadialProblem& p, const Grid& g) {
    double b = 4.0 * std::max(p.strength(), p.s_scale() * p.s_scale() + 1.0) *
               std::exp(-2.0 * g.x0);
    for (int it = 0; it < 40 && count_nodes(p, g, b) > 0; ++it) b *= 16.0;
    return b;
}

}  // namespace

const char* to_string(LadderMethod m) {
    switch (m) {
        case LadderMethod::numerov: return "numerov";
        case LadderMethod::fd_oracle: return "fd_oracle";
        case LadderMethod::bessel_analytic: return "bessel_analytic";
        case LadderMethod::geometric: return "geometric";
    }
    return "?";
}

RadialProblem RadialProblem::unitary(double strength, BoundaryConditions bc) {
    if (!(bc.r_short > 0.0) || !(bc.r_long > bc.r_short))
        raise(errc::invalid_argument, "need 0 < r_short < r_long");
    if (!std::isfinite(strength))
        raise(errc::invalid_argument, "strength must be finite");
    RadialProblem p;
    p.bc_ = bc;
    p.x0_ = std::log(bc.r_short);
    p.x1_ = p.x0_ + std::log(bc.r_long / bc.r_short);
    p.strength_ = strength;
    return p;
}

RadialProblem RadialProblem::from_profile(const PotentialProfile& profile,
                                          double mass_ratio, BoundaryConditions bc) {
    if (!(bc.r_short > 0.0) || !(bc.r_long > bc.r_short))
        raise(errc::invalid_argument, "need 0 < r_short < r_long");
    if (profile.grid.size() < 2)
        raise(errc::invalid_argument, "profile needs at least two samples");
    if (!(mass_ratio > 0.0) || !(mass_ratio < 1.0))
        raise(errc::domain, "mass ratio must satisfy 0 < A < 1");
    RadialProblem p;
    p.bc_ = bc;
    p.x0_ = std::log(bc.r_short);
    p.x1_ = p.x0_ + std::log(bc.r_long / bc.r_short);
    const double conv = 1.0 / (2.0 * mass_ratio);  // hbar^2/(2 m_beta) -> B units
    p.profile_x_.reserve(profile.grid.size());
    p.profile_w_.reserve(profile.grid.size());
    for (size_t i = 0; i < profile.grid.size(); ++i) {
        const double R = profile.grid[i];
        p.profile_x_.push_back(std::log(R));
        p.profile_w_.push_back(profile.values[i] * R * R * conv);
    }
    p.threshold_b_ = profile.threshold * conv;
    p.strength_ = 0.0;
    return p;
}

double RadialProblem::q(double x, double B) const {
    const double e2x = std::exp(2.0 * x);
    if (is_strength_form()) return (strength_ - 0.25) - B * e2x;
    // linear interpolation of W(x) = E(R) R^2 / (2A); constant-W inner
    // extension, threshold-energy outer extension
    double w;
    if (x <= profile_x_.front()) {
        w = profile_w_.front();
    } else if (x >= profile_x_.back()) {
        w = threshold_b_ * e2x;
    } else {
        auto it = std::upper_bound(profile_x_.begin(), profile_x_.end(), x);
        const size_t i = static_cast<size_t>(it - profile_x_.begin());
        const double t = (x - profile_x_[i - 1]) / (profile_x_[i] - profile_x_[i - 1]);
        w = profile_w_[i - 1] + t * (profile_w_[i] - profile_w_[i - 1]);
    }
    return -w - 0.25 - B * e2x;
}

double RadialProblem::s_scale() const {
    if (is_strength_form()) return std::sqrt(std::max(strength_ - 0.25, 1.0));
    double wmin = 0.0;
    for (double w : profile_w_) wmin = std::min(wmin, w);
    return std::sqrt(std::max(-wmin, 1.0));
}

int numerov_count_nodes(const RadialProblem& problem, double B) {
    if (!(B > 0.0)) raise(errc::invalid_argument, "B must be positive");
    const Grid g = make_grid(problem);
    return count_nodes(problem, g, B);
}

int total_level_count(const RadialProblem& problem) {
    const Grid g = make_grid(problem);
    return count_nodes(problem, g, b_floor(problem, g));
}

namespace {

double find_level(const RadialProblem& p, const Grid& g, int n, int total) {
    if (n < 0) raise(errc::invalid_argument, "level index must be >= 0");
    if (n >= total)
        raise(errc::insufficient_levels,
              "spectrum holds " + std::to_string(total) + " level(s), index " +
                  std::to_string(n) + " requested");

    // Bracket by node count: nodes(B) counts levels bound more deeply than B,
    // so nodes >= n+1 puts B below the target and nodes <= n above it.
    double lo = b_floor(p, g);
    double hi = b_ceiling(p, g);
    const double s = p.s_scale();
    const double gap_log = 2.0 * kPi / s;  // level spacing in ln B
    const double width_target = std::min(0.05, 0.25 * gap_log);
    while (std::log(hi / lo) > width_target) {
        const double mid = std::sqrt(lo * hi);
        if (count_nodes(p, g, mid) >= n + 1)
            lo = mid;
        else
            hi = mid;
    }

    // The interior node count flips a hair below the true eigenvalue (the
    // outermost node crosses the last grid cell before the wall), so nudge hi
    // upward until the matching determinant brackets the root.
    const int m = match_index(p, g, std::sqrt(lo * hi));
    double dlo = match_det(p, g, lo, m);
    double dhi = match_det(p, g, hi, m);
    const double expand = std::exp(std::min(0.02, 0.1 * gap_log) + 20.0 * g.h);
    int guard = 0;
    while (dlo * dhi > 0.0 && guard++ < 30) {
        hi *= expand;
        dhi = match_det(p, g, hi, m);
    }
    if (dlo * dhi > 0.0)
        raise(errc::internal, "matching determinant failed to bracket a level");

    // Secant with bisection safeguard on the determinant sign.
    double b0 = lo, d0 = dlo, b1 = hi, d1 = dhi;
    double blo = lo, bhi = hi;
    double dblo = dlo;
    double best = std::sqrt(lo * hi);
    for (int it = 0; it < 60; ++it) {
        double cand = std::sqrt(blo * bhi);
        if (d1 != d0) {
            const double sec = b1 - d1 * (b1 - b0) / (d1 - d0);
            if (std::isfinite(sec) && sec > blo && sec < bhi) cand = sec;
        }
        const double dc = match_det(p, g, cand, m);
        b0 = b1; d0 = d1;
        b1 = cand; d1 = dc;
        best = cand;
        if (dc == 0.0) return cand;
        if (dc * dblo > 0.0) {
            blo = cand;
            dblo = dc;
        } else {
            bhi = cand;
        }
        if (bhi - blo <= 1e-10 * bhi) return 0.5 * (blo + bhi);
        if (std::abs(b1 - b0) <= 1e-12 * b1) return b1;
    }
    return best;
}

}  // namespace

double level_by_index(const RadialProblem& problem, int n) {
    const Grid g = make_grid(problem);
    const int total = count_nodes(problem, g, b_floor(problem, g));
    return find_level(problem, g, n, total);
}

EnergyLadder bound_states(const RadialProblem& problem, int max_levels) {
    if (max_levels < 0) raise(errc::invalid_argument, "max_levels must be >= 0");
    const Grid g = make_grid(problem);
    const int total = count_nodes(problem, g, b_floor(problem, g));
    const int want = std::min(max_levels, total);

    EnergyLadder l;
    l.method = LadderMethod::numerov;
    l.r_short = problem.bc().r_short;
    l.r_long = problem.bc().r_long;
    if (problem.is_strength_form() && problem.strength() > 0.25)
        l.s = std::sqrt(problem.strength() - 0.25);
    for (int n = 0; n < want; ++n) {
        const double B = find_level(problem, g, n, total);
        l.levels.push_back(B);
        l.node_counts.push_back(count_nodes(problem, g, B));
    }
    return l;
}

EnergyLadder unitary_box_spectrum(const ScalingFactor& s, BoundaryConditions bc,
                                  int max_levels) {
    if (!(s.s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    auto problem = RadialProblem::unitary(s.s * s.s + 0.25, bc);
    EnergyLadder l = bound_states(problem, max_levels);
    l.s = s.s;
    return l;
}

EnergyLadder bessel_spectrum(const ScalingFactor& s, double r_short, int max_levels) {
    if (!(s.s > 0.0)) raise(errc::domain, "scaling factor must be positive");
    if (!(r_short > 0.0)) raise(errc::domain, "r_short must be positive");
    if (max_levels < 0) raise(errc::invalid_argument, "max_levels must be >= 0");

    const double x_hi = std::sqrt(s.s * s.s + 0.25) + 1.0;
    const double x_lo = x_hi * std::exp(-(max_levels + 4) * kPi / s.s);
    auto zeros = besselk_zeros(s.s, x_lo, x_hi);  // ascending

    EnergyLadder l;
    l.method = LadderMethod::bessel_analytic;
    l.s = s.s;
    l.r_short = r_short;
    const int want = std::min<int>(max_levels, static_cast<int>(zeros.size()));
    for (int n = 0; n < want; ++n) {
        const double x = zeros[zeros.size() - 1 - n];
        l.levels.push_back((x / r_short) * (x / r_short));
        l.node_counts.push_back(n);
    }
    return l;
}

EnergyLadder fd_oracle(const RadialProblem& problem, int grid_size) {
    if (grid_size < 200) raise(errc::invalid_argument, "fd oracle needs grid_size >= 200");
    const double L = problem.x_long() - problem.x_short();
    const int m = grid_size;
    const double h = L / (m + 1);

    // Symmetrized log-grid problem: A v = lambda v with lambda = -B,
    // A = M^{-1/2} (-D2 - C) M^{-1/2}, M = diag(e^{2x}), C = q(x, 0).
    std::vector<double> d(m), e(m - 1);
    std::vector<double> xs(m);
    for (int j = 0; j < m; ++j) xs[j] = problem.x_short() + h * (j + 1);
    for (int j = 0; j < m; ++j)
        d[j] = (2.0 / (h * h) - problem.q(xs[j], 0.0)) * std::exp(-2.0 * xs[j]);
    for (int j = 0; j + 1 < m; ++j)
        e[j] = -std::exp(-(xs[j] + xs[j + 1])) / (h * h);

    std::vector<double> w(m);
    lapack_int found = 0;
    std::vector<lapack_int> isuppz(2 * static_cast<size_t>(m));
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'N', 'V', m, d.data(), e.data(),
        /*vl=*/-1e300, /*vu=*/-1e-300, 0, 0, /*abstol=*/0.0, &found, w.data(),
        nullptr, m, isuppz.data());
    if (info != 0) raise(errc::internal, "LAPACK dstevr failed: info " + std::to_string(info));

    EnergyLadder l;
    l.method = LadderMethod::fd_oracle;
    l.r_short = problem.bc().r_short;
    l.r_long = problem.bc().r_long;
    if (problem.is_strength_form() && problem.strength() > 0.25)
        l.s = std::sqrt(problem.strength() - 0.25);
    for (lapack_int k = 0; k < found; ++k) {
        const double B = -w[k];  // ascending lambda = descending B
        if (!(B > 0.0)) break;
        l.levels.push_back(B);
        l.node_counts.push_back(static_cast<int>(k));
    }
    return l;
}

}  // namespace hhl
