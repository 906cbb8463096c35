/* hhl: bound-state spectra of two heavy bosons binding N-2 light ones near
 * the unitary limit.  C API: opaque handles, integer status codes; every
 * function returning hhl_status leaves outputs untouched on failure.
 *
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_H
#define HHL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hhl_status {
    HHL_OK = 0,
    HHL_EINVAL = 1,       /* invalid argument */
    HHL_EDOMAIN = 2,      /* outside the mathematical domain */
    HHL_ENOLEVEL = 3,     /* light-particle level merged with the continuum */
    HHL_ENOREF = 4,       /* mass ratio not in the reference table */
    HHL_EINSUFFICIENT = 5,/* spectrum holds fewer levels than requested */
    HHL_ECONSTRAINT = 6,  /* assembled spectrum violated an ordering rule */
    HHL_EIO = 7,          /* file error */
    HHL_EINTERNAL = 8
} hhl_status;

const char* hhl_status_str(int status);
/* Message of the most recent failure on this thread ("" if none). */
const char* hhl_last_error(void);

/* ---- constants and scaling factors ---- */

/* Fixed point of x = exp(-x). */
double hhl_omega(void);

/* Sources for a scaling factor. */
enum { HHL_S_ADIABATIC = 0, HHL_S_EXACT_REFERENCE = 1, HHL_S_HYBRID = 2 };

hhl_status hhl_adiabatic_s(double mass_ratio, int n_bosons, double* s_out);
hhl_status hhl_hybrid_s(double s0, int n_bosons, double* s_out);
/* Reference s0 for tabulated mass ratios; HHL_ENOREF otherwise. */
hhl_status hhl_reference_s0(double mass_ratio, double* s0_out);
/* Reference s0 when tabulated, adiabatic s3 otherwise; source_out gets HHL_S_*. */
hhl_status hhl_resolve_s0(double mass_ratio, double* s0_out, int* source_out);
/* Number of tabulated mass ratios / copy them out (returns count written). */
int hhl_reference_table_size(void);
int hhl_reference_table(double* mass_ratios, double* s0, int capacity);

/* e^{pi/s} (half != 0) or e^{2 pi/s}. */
hhl_status hhl_geometric_ratio(double s, int half, double* ratio_out);

hhl_status hhl_trimer_level_count(double a_abs, double r1, double s, int* count_out);
hhl_status hhl_tetramer_level_count(double b3, double r2, double s4, int* count_out);
hhl_status hhl_intermediate_state_count(double s_minor, double s_major, int* count_out);

/* ---- light-particle equation and effective potential ---- */

/* unitary != 0 ignores a.  r_star = 0 is the broad-resonance equation. */
hhl_status hhl_solve_kappa(double R, double a, int unitary, double r_star,
                           double* kappa_out, double* residual_out);
hhl_status hhl_kappa_closed_form(double R, double a, double epsilon, double* kappa_out);
/* Least-squares epsilon on a caller-supplied R grid (a > 0). */
hhl_status hhl_fit_epsilon(double a, const double* grid, int n, double* eps_out);
/* The default fitting grid: 50 log-spaced points on [0.1 a, 10 a]. */
hhl_status hhl_default_epsilon_grid(double a, double* grid50);
hhl_status hhl_coulomb_coefficient(double gamma, double epsilon, double* coeff_out);
hhl_status hhl_effective_potential(double mass_ratio, int n_bosons, double a,
                                   int unitary, double r_star, double R, double* e_out);

typedef struct hhl_profile hhl_profile;
hhl_status hhl_profile_compute(double mass_ratio, int n_bosons, double a, int unitary,
                               double r_star, const double* grid, int n,
                               hhl_profile** out);
int hhl_profile_size(const hhl_profile* p);
hhl_status hhl_profile_point(const hhl_profile* p, int i, double* R_out, double* E_out);
double hhl_profile_threshold(const hhl_profile* p);
/* |a| when the a<0 profile terminated; NaN otherwise. */
double hhl_profile_merge_radius(const hhl_profile* p);
/* extra_thresholds may be NULL (n_extra = 0); "-" writes to stdout. */
hhl_status hhl_profile_write_csv(const hhl_profile* p, const char* path, int precision,
                                 const double* extra_thresholds, int n_extra);
void hhl_profile_free(hhl_profile* p);

/* ---- K_{is} ---- */

hhl_status hhl_besselk_imag(double s, double x, double* value_out, int* underflow_out);
hhl_status hhl_besselk_phase(double s, double x, double* value_out);
hhl_status hhl_arg_gamma_1pis(double s, double* arg_out);
/* Zeros in [x_lo, x_hi], ascending; writes up to capacity, count_out gets the
 * total found. */
hhl_status hhl_besselk_zeros(double s, double x_lo, double x_hi,
                             double* zeros, int capacity, int* count_out);

/* ---- eigensolver ladders ---- */

typedef struct hhl_ladder hhl_ladder;

/* Numerov shooting between hard walls; strength coefficient s^2 + 1/4. */
hhl_status hhl_unitary_box_spectrum(double s, double r_short, double r_long,
                                    int max_levels, hhl_ladder** out);
/* Semi-infinite spectrum from the zeros of K_{is}. */
hhl_status hhl_bessel_spectrum(double s, double r_short, int max_levels,
                               hhl_ladder** out);
/* Finite-difference oracle on grid_size interior points (>= 200). */
hhl_status hhl_fd_spectrum(double s, double r_short, double r_long, int grid_size,
                           hhl_ladder** out);
/* Spectrum of a tabulated profile between hard walls. */
hhl_status hhl_profile_spectrum(const hhl_profile* p, double mass_ratio,
                                double r_short, double r_long, int max_levels,
                                hhl_ladder** out);
int hhl_ladder_size(const hhl_ladder* l);
hhl_status hhl_ladder_level(const hhl_ladder* l, int n, double* B_out);
hhl_status hhl_ladder_nodes(const hhl_ladder* l, int n, int* nodes_out);
const char* hhl_ladder_method(const hhl_ladder* l);
hhl_status hhl_ladder_write_json(const hhl_ladder* l, const char* path, int precision);
void hhl_ladder_free(hhl_ladder* l);

/* ---- interwoven assembly ---- */

typedef struct hhl_interwoven hhl_interwoven;

typedef struct hhl_interwoven_config {
    int trimer_levels;          /* default 4 */
    int max_levels_per_ladder;  /* default 8 */
    double head_margin;         /* default 1.0 */
    double ground_head;         /* 0 = margin rule */
    int max_n_bosons;           /* default 4 */
} hhl_interwoven_config;

void hhl_interwoven_config_init(hhl_interwoven_config* cfg);
hhl_status hhl_interwoven_compute(double mass_ratio, double b3_ground,
                                  const hhl_interwoven_config* cfg,
                                  hhl_interwoven** out);
int hhl_interwoven_tetramer_count(const hhl_interwoven* sp);
hhl_status hhl_interwoven_write_json(const hhl_interwoven* sp, const char* path,
                                     int precision);
void hhl_interwoven_free(hhl_interwoven* sp);

/* ---- scaling curves and ratio tables ---- */

typedef struct hhl_curve hhl_curve;

hhl_status hhl_scaling_curve(double mass_ratio, int n_bosons, double r_short,
                             const double* rc_list, int n, hhl_curve** out);
int hhl_curve_size(const hhl_curve* c);
hhl_status hhl_curve_point(const hhl_curve* c, int i, double* rc_out,
                           double* x_out, double* y_out);
double hhl_curve_fixed_point(const hhl_curve* c);
/* with_reference_rows != 0 appends Rc = 0 rows carrying e^{2 pi/s_N}, N = 3..8. */
hhl_status hhl_curve_write_csv(const hhl_curve* c, double mass_ratio, const char* path,
                               int precision, int with_reference_rows);
void hhl_curve_free(hhl_curve* c);

/* Rendered text of the reference tables (which: 1 or 2).  Free with
 * hhl_string_free. */
hhl_status hhl_table_render(int which, char** text_out);
void hhl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HHL_H */
