/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "hhl/adiabatic.hpp"
#include "hhl/bessel_kis.hpp"
#include "hhl/constants.hpp"
#include "hhl/io.hpp"
#include "hhl/radial.hpp"
#include "hhl/spectrum.hpp"

// Opaque handle bodies.
struct hhl_profile {
    hhl::PotentialProfile p;
};
struct hhl_ladder {
    hhl::EnergyLadder l;
};
struct hhl_interwoven {
    hhl::InterwovenSpectrum sp;
};
struct hhl_curve {
    hhl::ScalingCurve c;
};

namespace {

thread_local std::string g_last_error;

int set_error(const hhl::Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
}

// Runs fn, mapping exceptions onto status codes.  Outputs are only written on
// success inside fn.
template <typename F>
hhl_status guarded(F&& fn) {
    try {
        fn();
        return HHL_OK;
    } catch (const hhl::Error& e) {
        return static_cast<hhl_status>(set_error(e));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return HHL_EINTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HHL_EINTERNAL;
    }
}

hhl::ScatteringLength make_a(double a, int unitary) {
    return unitary ? hhl::ScatteringLength::unitary()
                   : hhl::ScatteringLength::finite(a);
}

int source_code(hhl::SSource s) {
    switch (s) {
        case hhl::SSource::adiabatic: return HHL_S_ADIABATIC;
        case hhl::SSource::exact_reference: return HHL_S_EXACT_REFERENCE;
        case hhl::SSource::hybrid: return HHL_S_HYBRID;
    }
    return HHL_S_ADIABATIC;
}

void require(bool ok, const char* msg) {
    if (!ok) hhl::raise(hhl::errc::invalid_argument, msg);
}

}  // namespace

extern "C" {

const char* hhl_status_str(int status) {
    switch (status) {
        case HHL_OK: return "ok";
        case HHL_EINVAL: return "invalid argument";
        case HHL_EDOMAIN: return "domain error";
        case HHL_ENOLEVEL: return "no bound level";
        case HHL_ENOREF: return "no reference value";
        case HHL_EINSUFFICIENT: return "insufficient levels";
        case HHL_ECONSTRAINT: return "constraint violation";
        case HHL_EIO: return "i/o error";
        default: return "internal error";
    }
}

const char* hhl_last_error(void) { return g_last_error.c_str(); }

double hhl_omega(void) { return hhl::omega_constant(); }

hhl_status hhl_adiabatic_s(double mass_ratio, int n_bosons, double* s_out) {
    return guarded([&] {
        require(s_out != nullptr, "null output");
        *s_out = hhl::adiabatic_s(mass_ratio, n_bosons).s;
    });
}

hhl_status hhl_hybrid_s(double s0, int n_bosons, double* s_out) {
    return guarded([&] {
        require(s_out != nullptr, "null output");
        *s_out = hhl::hybrid_s(s0, n_bosons).s;
    });
}

hhl_status hhl_reference_s0(double mass_ratio, double* s0_out) {
    return guarded([&] {
        require(s0_out != nullptr, "null output");
        *s0_out = hhl::reference_s0_or_throw(mass_ratio);
    });
}

hhl_status hhl_resolve_s0(double mass_ratio, double* s0_out, int* source_out) {
    return guarded([&] {
        require(s0_out != nullptr, "null output");
        const auto sf = hhl::resolve_s0(mass_ratio);
        *s0_out = sf.s;
        if (source_out) *source_out = source_code(sf.source);
    });
}

int hhl_reference_table_size(void) {
    return static_cast<int>(hhl::reference_mass_ratios().size());
}

int hhl_reference_table(double* mass_ratios, double* s0, int capacity) {
    const auto keys = hhl::reference_mass_ratios();
    int n = 0;
    for (double A : keys) {
        if (n >= capacity) break;
        if (mass_ratios) mass_ratios[n] = A;
        if (s0) s0[n] = *hhl::reference_s0(A);
        ++n;
    }
    return n;
}

hhl_status hhl_geometric_ratio(double s, int half, double* ratio_out) {
    return guarded([&] {
        require(ratio_out != nullptr, "null output");
        *ratio_out = hhl::geometric_ratio(s, half != 0);
    });
}

hhl_status hhl_trimer_level_count(double a_abs, double r1, double s, int* count_out) {
    return guarded([&] {
        require(count_out != nullptr, "null output");
        *count_out = hhl::trimer_level_count(a_abs, r1, s);
    });
}

hhl_status hhl_tetramer_level_count(double b3, double r2, double s4, int* count_out) {
    return guarded([&] {
        require(count_out != nullptr, "null output");
        *count_out = hhl::tetramer_level_count(b3, r2, s4);
    });
}

hhl_status hhl_intermediate_state_count(double s_minor, double s_major,
                                        int* count_out) {
    return guarded([&] {
        require(count_out != nullptr, "null output");
        *count_out = hhl::intermediate_state_count(s_minor, s_major);
    });
}

hhl_status hhl_solve_kappa(double R, double a, int unitary, double r_star,
                           double* kappa_out, double* residual_out) {
    return guarded([&] {
        require(kappa_out != nullptr, "null output");
        const auto sol = hhl::solve_kappa_narrow(R, make_a(a, unitary), r_star);
        *kappa_out = sol.kappa;
        if (residual_out) *residual_out = sol.residual;
    });
}

hhl_status hhl_kappa_closed_form(double R, double a, double epsilon,
                                 double* kappa_out) {
    return guarded([&] {
        require(kappa_out != nullptr, "null output");
        *kappa_out = hhl::kappa_closed_form(R, a, epsilon);
    });
}

hhl_status hhl_fit_epsilon(double a, const double* grid, int n, double* eps_out) {
    return guarded([&] {
        require(eps_out != nullptr && grid != nullptr && n > 0, "bad fit input");
        *eps_out = hhl::fit_epsilon(a, {grid, static_cast<size_t>(n)});
    });
}

hhl_status hhl_default_epsilon_grid(double a, double* grid50) {
    return guarded([&] {
        require(grid50 != nullptr, "null output");
        const auto g = hhl::default_epsilon_grid(a);
        std::memcpy(grid50, g.data(), g.size() * sizeof(double));
    });
}

hhl_status hhl_coulomb_coefficient(double gamma, double epsilon, double* coeff_out) {
    return guarded([&] {
        require(coeff_out != nullptr, "null output");
        *coeff_out = hhl::coulomb_coefficient(gamma, epsilon);
    });
}

hhl_status hhl_effective_potential(double mass_ratio, int n_bosons, double a,
                                   int unitary, double r_star, double R,
                                   double* e_out) {
    return guarded([&] {
        require(e_out != nullptr, "null output");
        hhl::SystemParams p{mass_ratio, n_bosons, make_a(a, unitary), r_star};
        *e_out = hhl::effective_potential(p, R);
    });
}

hhl_status hhl_profile_compute(double mass_ratio, int n_bosons, double a, int unitary,
                               double r_star, const double* grid, int n,
                               hhl_profile** out) {
    return guarded([&] {
        require(out != nullptr && grid != nullptr && n > 0, "bad profile input");
        hhl::SystemParams p{mass_ratio, n_bosons, make_a(a, unitary), r_star};
        auto h = std::make_unique<hhl_profile>();
        h->p = hhl::potential_profile(p, {grid, static_cast<size_t>(n)});
        *out = h.release();
    });
}

int hhl_profile_size(const hhl_profile* p) {
    return p ? static_cast<int>(p->p.grid.size()) : 0;
}

hhl_status hhl_profile_point(const hhl_profile* p, int i, double* R_out,
                             double* E_out) {
    return guarded([&] {
        require(p != nullptr && i >= 0 && i < hhl_profile_size(p), "bad index");
        if (R_out) *R_out = p->p.grid[i];
        if (E_out) *E_out = p->p.values[i];
    });
}

double hhl_profile_threshold(const hhl_profile* p) { return p->p.threshold; }
double hhl_profile_merge_radius(const hhl_profile* p) { return p->p.merge_radius; }

hhl_status hhl_profile_write_csv(const hhl_profile* p, const char* path, int precision,
                                 const double* extra_thresholds, int n_extra) {
    return guarded([&] {
        require(p != nullptr && path != nullptr, "bad csv input");
        require(n_extra == 0 || extra_thresholds != nullptr, "bad thresholds");
        std::ostringstream os;
        hhl::io::write_profile_csv(
            os, p->p, precision,
            {extra_thresholds, static_cast<size_t>(n_extra < 0 ? 0 : n_extra)});
        hhl::io::write_text_file(path, os.str());
    });
}

void hhl_profile_free(hhl_profile* p) { delete p; }

hhl_status hhl_besselk_imag(double s, double x, double* value_out,
                            int* underflow_out) {
    return guarded([&] {
        require(value_out != nullptr, "null output");
        const auto r = hhl::besselk_imag_ex(s, x);
        *value_out = r.value;
        if (underflow_out) *underflow_out = r.underflow ? 1 : 0;
    });
}

hhl_status hhl_besselk_phase(double s, double x, double* value_out) {
    return guarded([&] {
        require(value_out != nullptr, "null output");
        *value_out = hhl::besselk_phase(s, x);
    });
}

hhl_status hhl_arg_gamma_1pis(double s, double* arg_out) {
    return guarded([&] {
        require(arg_out != nullptr, "null output");
        *arg_out = hhl::arg_gamma_one_plus_is(s);
    });
}

hhl_status hhl_besselk_zeros(double s, double x_lo, double x_hi, double* zeros,
                             int capacity, int* count_out) {
    return guarded([&] {
        require(count_out != nullptr, "null output");
        require(capacity == 0 || zeros != nullptr, "null zero buffer");
        const auto z = hhl::besselk_zeros(s, x_lo, x_hi);
        *count_out = static_cast<int>(z.size());
        const int n = std::min<int>(capacity, static_cast<int>(z.size()));
        for (int i = 0; i < n; ++i) zeros[i] = z[i];
    });
}

namespace {
hhl_status make_ladder(hhl::EnergyLadder&& l, hhl_ladder** out) {
    auto h = std::make_unique<hhl_ladder>();
    h->l = std::move(l);
    *out = h.release();
    return HHL_OK;
}
}  // namespace

hhl_status hhl_unitary_box_spectrum(double s, double r_short, double r_long,
                                    int max_levels, hhl_ladder** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        hhl::ScalingFactor sf{s, 3, hhl::SSource::hybrid};
        make_ladder(hhl::unitary_box_spectrum(sf, {r_short, r_long}, max_levels), out);
    });
}

hhl_status hhl_bessel_spectrum(double s, double r_short, int max_levels,
                               hhl_ladder** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        hhl::ScalingFactor sf{s, 3, hhl::SSource::hybrid};
        make_ladder(hhl::bessel_spectrum(sf, r_short, max_levels), out);
    });
}

hhl_status hhl_fd_spectrum(double s, double r_short, double r_long, int grid_size,
                           hhl_ladder** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto problem = hhl::RadialProblem::unitary(s * s + 0.25, {r_short, r_long});
        make_ladder(hhl::fd_oracle(problem, grid_size), out);
    });
}

hhl_status hhl_profile_spectrum(const hhl_profile* p, double mass_ratio,
                                double r_short, double r_long, int max_levels,
                                hhl_ladder** out) {
    return guarded([&] {
        require(out != nullptr && p != nullptr, "null input");
        auto problem =
            hhl::RadialProblem::from_profile(p->p, mass_ratio, {r_short, r_long});
        make_ladder(hhl::bound_states(problem, max_levels), out);
    });
}

int hhl_ladder_size(const hhl_ladder* l) {
    return l ? static_cast<int>(l->l.levels.size()) : 0;
}

hhl_status hhl_ladder_level(const hhl_ladder* l, int n, double* B_out) {
    return guarded([&] {
        require(l != nullptr && B_out != nullptr, "null input");
        require(n >= 0 && n < hhl_ladder_size(l), "level index out of range");
        *B_out = l->l.levels[n];
    });
}

hhl_status hhl_ladder_nodes(const hhl_ladder* l, int n, int* nodes_out) {
    return guarded([&] {
        require(l != nullptr && nodes_out != nullptr, "null input");
        require(n >= 0 && n < hhl_ladder_size(l), "level index out of range");
        *nodes_out = l->l.node_counts[n];
    });
}

const char* hhl_ladder_method(const hhl_ladder* l) {
    return l ? hhl::to_string(l->l.method) : "?";
}

hhl_status hhl_ladder_write_json(const hhl_ladder* l, const char* path,
                                 int precision) {
    return guarded([&] {
        require(l != nullptr && path != nullptr, "null input");
        std::ostringstream os;
        hhl::io::write_ladder_json(os, l->l, precision);
        hhl::io::write_text_file(path, os.str());
    });
}

void hhl_ladder_free(hhl_ladder* l) { delete l; }

void hhl_interwoven_config_init(hhl_interwoven_config* cfg) {
    if (!cfg) return;
    cfg->trimer_levels = 4;
    cfg->max_levels_per_ladder = 8;
    cfg->head_margin = 1.0;
    cfg->ground_head = 0.0;
    cfg->max_n_bosons = 4;
}

hhl_status hhl_interwoven_compute(double mass_ratio, double b3_ground,
                                  const hhl_interwoven_config* cfg,
                                  hhl_interwoven** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        hhl_interwoven_config def;
        hhl_interwoven_config_init(&def);
        const hhl_interwoven_config* c = cfg ? cfg : &def;
        hhl::InterwovenConfig ic;
        ic.trimer_levels = c->trimer_levels;
        ic.max_levels_per_ladder = c->max_levels_per_ladder;
        ic.head_margin = c->head_margin;
        ic.ground_head = c->ground_head;
        ic.max_n_bosons = c->max_n_bosons;
        auto h = std::make_unique<hhl_interwoven>();
        h->sp = hhl::interwoven_spectrum(mass_ratio, b3_ground, ic);
        *out = h.release();
    });
}

int hhl_interwoven_tetramer_count(const hhl_interwoven* sp) {
    return sp ? static_cast<int>(sp->sp.tetramer.size()) : 0;
}

hhl_status hhl_interwoven_write_json(const hhl_interwoven* sp, const char* path,
                                     int precision) {
    return guarded([&] {
        require(sp != nullptr && path != nullptr, "null input");
        std::ostringstream os;
        hhl::io::write_interwoven_json(os, sp->sp, precision);
        hhl::io::write_text_file(path, os.str());
    });
}

void hhl_interwoven_free(hhl_interwoven* sp) { delete sp; }

hhl_status hhl_scaling_curve(double mass_ratio, int n_bosons, double r_short,
                             const double* rc_list, int n, hhl_curve** out) {
    return guarded([&] {
        require(out != nullptr && rc_list != nullptr && n > 0, "bad curve input");
        auto h = std::make_unique<hhl_curve>();
        h->c = hhl::scaling_curve(mass_ratio, n_bosons, r_short,
                                  {rc_list, static_cast<size_t>(n)});
        *out = h.release();
    });
}

int hhl_curve_size(const hhl_curve* c) {
    return c ? static_cast<int>(c->c.points.size()) : 0;
}

hhl_status hhl_curve_point(const hhl_curve* c, int i, double* rc_out, double* x_out,
                           double* y_out) {
    return guarded([&] {
        require(c != nullptr && i >= 0 && i < hhl_curve_size(c), "bad index");
        if (rc_out) *rc_out = c->c.points[i].rc;
        if (x_out) *x_out = c->c.points[i].X;
        if (y_out) *y_out = c->c.points[i].Y;
    });
}

double hhl_curve_fixed_point(const hhl_curve* c) { return c->c.fixed_point; }

hhl_status hhl_curve_write_csv(const hhl_curve* c, double mass_ratio, const char* path,
                               int precision, int with_reference_rows) {
    return guarded([&] {
        require(c != nullptr && path != nullptr, "null input");
        std::vector<double> refs;
        if (with_reference_rows) {
            const double s0 = hhl::resolve_s0(mass_ratio).s;
            for (int N = 3; N <= 8; ++N) {
                const double s = N == 3 ? s0 : hhl::hybrid_s(s0, N).s;
                refs.push_back(hhl::geometric_ratio(s));
            }
        }
        std::ostringstream os;
        hhl::io::write_curve_csv(os, c->c, precision, refs);
        hhl::io::write_text_file(path, os.str());
    });
}

void hhl_curve_free(hhl_curve* c) { delete c; }

hhl_status hhl_table_render(int which, char** text_out) {
    return guarded([&] {
        require(text_out != nullptr, "null output");
        const std::string s = hhl::io::render_table(which);
        char* buf = static_cast<char*>(::operator new(s.size() + 1));
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *text_out = buf;
    });
}

void hhl_string_free(char* s) { ::operator delete(s); }

}  // extern "C"
