/* hhl command-line front end.  Talks to the library through the C API only.
 * SPDX-License-Identifier: Apache-2.0 */
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhl.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct CliError {
    int code;
    std::string msg;
};

void check(hhl_status st) {
    if (st == HHL_OK) return;
    const int code = st == HHL_EINVAL ? kExitConfig : kExitSolver;
    throw CliError{code, std::string(hhl_status_str(st)) + ": " + hhl_last_error()};
}

std::string fmt(double v, int precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) throw CliError{kExitSolver, "cannot open '" + out_path + "'"};
    std::fputs(text.c_str(), f);
    std::fclose(f);
}

std::vector<double> make_log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
        throw CliError{kExitConfig, "grid needs 0 < r-min < r-max and points >= 2"};
    std::vector<double> g(n);
    const double f = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(f * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

// Scaling factor for (A, N): reference s0 when tabulated, adiabatic s3
// otherwise; N >= 4 through the hybrid relation.
double resolve_s(double mass_ratio, int n_bosons) {
    double s0 = 0.0;
    int src = 0;
    check(hhl_resolve_s0(mass_ratio, &s0, &src));
    if (n_bosons == 3) return s0;
    double s = 0.0;
    check(hhl_hybrid_s(s0, n_bosons, &s));
    return s;
}

void require_format(const std::string& format, const char* expected) {
    if (!format.empty() && format != expected)
        throw CliError{kExitConfig,
                       std::string("this command writes ") + expected + " output"};
}

struct CommonOpts {
    double mass_ratio = 0.01;
    int n_bosons = 3;
    double a = 0.0;
    bool unitary = false;
    double rstar = 0.0;
    double r_short = 1.0;
    double r_long = 1000.0;
    int max_levels = 4;
    int precision = 10;
    std::string out = "-";
    std::string format;
};

int cmd_constants(const CommonOpts& o) {
    const double g = hhl_omega();
    double grid[50];
    check(hhl_default_epsilon_grid(1.0, grid));
    double eps = 0.0;
    check(hhl_fit_epsilon(1.0, grid, 50, &eps));
    double c185 = 0.0, cfit = 0.0;
    check(hhl_coulomb_coefficient(g, 0.185, &c185));
    check(hhl_coulomb_coefficient(g, eps, &cfit));
    std::string text;
    text += "gamma                " + fmt(g, o.precision) + "\n";
    text += "gamma_residual       " + fmt(std::fabs(g - std::exp(-g)), 3) + "\n";
    text += "epsilon_fit          " + fmt(eps, o.precision) + "\n";
    text += "coulomb_coeff(0.185) " + fmt(c185, o.precision) + "\n";
    text += "coulomb_coeff(fit)   " + fmt(cfit, o.precision) + "\n";
    emit(o.out, text);
    return 0;
}

int cmd_table(const std::string& which, const CommonOpts& o) {
    int id = 0;
    if (which == "1" || which == "table1") id = 1;
    if (which == "2" || which == "table2") id = 2;
    if (id == 0) throw CliError{kExitConfig, "table must be 1|table1|2|table2"};
    char* text = nullptr;
    check(hhl_table_render(id, &text));
    std::unique_ptr<char, decltype(&hhl_string_free)> guard(text, &hhl_string_free);
    emit(o.out, text);
    return 0;
}

int cmd_potential(const CommonOpts& o, double r_min, double r_max, int points,
                  int thresholds, double b3_ground) {
    require_format(o.format, "csv");
    auto grid = make_log_grid(r_min, r_max, points);
    hhl_profile* prof = nullptr;
    check(hhl_profile_compute(o.mass_ratio, o.n_bosons, o.a, o.unitary ? 1 : 0,
                              o.rstar, grid.data(), (int)grid.size(), &prof));
    std::unique_ptr<hhl_profile, decltype(&hhl_profile_free)> guard(prof,
                                                                    &hhl_profile_free);
    std::vector<double> thr;
    if (thresholds > 0) {
        double s0 = 0.0;
        int src = 0;
        check(hhl_resolve_s0(o.mass_ratio, &s0, &src));
        for (int j = 0; j < thresholds; ++j)
            thr.push_back(-b3_ground * std::exp(-2.0 * j * M_PI / s0));
    }
    check(hhl_profile_write_csv(prof, o.out.c_str(), o.precision,
                                thr.empty() ? nullptr : thr.data(), (int)thr.size()));
    const double merge = hhl_profile_merge_radius(prof);
    if (!std::isnan(merge))
        std::fprintf(stderr, "note: profile stops at the merge radius |a| = %s\n",
                     fmt(merge, 6).c_str());
    return 0;
}

int cmd_spectrum(const CommonOpts& o, const std::string& method, int grid_size,
                 bool interwoven, double b3_ground) {
    require_format(o.format, "json");
    if (interwoven) {
        hhl_interwoven_config cfg;
        hhl_interwoven_config_init(&cfg);
        cfg.max_n_bosons = o.n_bosons > 4 ? o.n_bosons : 4;
        cfg.max_levels_per_ladder = o.max_levels;
        hhl_interwoven* sp = nullptr;
        check(hhl_interwoven_compute(o.mass_ratio, b3_ground, &cfg, &sp));
        std::unique_ptr<hhl_interwoven, decltype(&hhl_interwoven_free)> guard(
            sp, &hhl_interwoven_free);
        check(hhl_interwoven_write_json(sp, o.out.c_str(), o.precision));
        return 0;
    }
    const double s = resolve_s(o.mass_ratio, o.n_bosons);
    hhl_ladder* l = nullptr;
    if (method == "numerov")
        check(hhl_unitary_box_spectrum(s, o.r_short, o.r_long, o.max_levels, &l));
    else if (method == "bessel")
        check(hhl_bessel_spectrum(s, o.r_short, o.max_levels, &l));
    else if (method == "fd")
        check(hhl_fd_spectrum(s, o.r_short, o.r_long, grid_size, &l));
    else
        throw CliError{kExitConfig, "method must be numerov|bessel|fd"};
    std::unique_ptr<hhl_ladder, decltype(&hhl_ladder_free)> guard(l, &hhl_ladder_free);
    check(hhl_ladder_write_json(l, o.out.c_str(), o.precision));
    return 0;
}

int cmd_scaling_curve(const CommonOpts& o, const std::vector<double>& rc_list) {
    require_format(o.format, "csv");
    if (rc_list.empty()) throw CliError{kExitConfig, "--rc-list is required"};
    hhl_curve* c = nullptr;
    check(hhl_scaling_curve(o.mass_ratio, o.n_bosons, o.r_short, rc_list.data(),
                            (int)rc_list.size(), &c));
    std::unique_ptr<hhl_curve, decltype(&hhl_curve_free)> guard(c, &hhl_curve_free);
    check(hhl_curve_write_csv(c, o.mass_ratio, o.out.c_str(), o.precision, 1));
    return 0;
}

int cmd_count_levels(const CommonOpts& o, double b3_ground) {
    int count = 0;
    if (o.n_bosons == 3) {
        if (o.unitary)
            throw CliError{kExitConfig,
                           "the level count is infinite at unitarity; pass a finite "
                           "--scattering-length"};
        const double s = resolve_s(o.mass_ratio, 3);
        check(hhl_trimer_level_count(std::fabs(o.a), o.r_short, s, &count));
    } else if (o.n_bosons == 4) {
        if (!(b3_ground > 0.0))
            throw CliError{kExitConfig, "--b3-ground is required for --nbosons 4"};
        const double s4 = resolve_s(o.mass_ratio, 4);
        check(hhl_tetramer_level_count(b3_ground, o.r_short, s4, &count));
    } else {
        throw CliError{kExitConfig, "count-levels supports --nbosons 3 or 4"};
    }
    if (o.format == "json")
        emit(o.out, "{\"count\": " + std::to_string(count) + "}\n");
    else
        emit(o.out, std::to_string(count) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hhl: effective potentials and geometric bound-state spectra of two heavy "
        "bosons binding N-2 light ones near the unitary limit"};
    app.set_config("--config", "", "flat key=value configuration file");
    app.require_subcommand(1);

    CommonOpts o;
    auto add_common = [&](CLI::App* sub, bool with_system) {
        sub->add_option("--precision", o.precision, "significant digits in output")
            ->capture_default_str();
        sub->add_option("--out", o.out, "output path ('-' = stdout)")
            ->capture_default_str();
        sub->add_option("--format", o.format, "output format (csv|json)");
        if (with_system) {
            sub->add_option("--mass-ratio", o.mass_ratio, "mass ratio A = m_b/m_a")
                ->capture_default_str();
            sub->add_option("--nbosons", o.n_bosons, "total boson count N")
                ->capture_default_str();
            auto* sl = sub->add_option("--scattering-length", o.a,
                                       "heavy-light scattering length");
            sub->add_flag("--unitary", o.unitary, "unitary limit (|a| -> infinity)")
                ->excludes(sl);
            sub->add_option("--rstar", o.rstar, "effective-range parameter R*")
                ->capture_default_str();
        }
    };

    auto* c_const = app.add_subcommand("constants",
                                       "omega constant, fitted epsilon, Coulomb "
                                       "coefficient");
    add_common(c_const, false);

    std::string which = "1";
    auto* c_table = app.add_subcommand("table", "scaling-factor tables (1 or 2)");
    c_table->add_option("which", which, "table id: 1|table1|2|table2");
    add_common(c_table, false);

    double r_min = 0.1, r_max = 100.0, b3_ground = 1.0;
    int points = 200, thresholds = 0;
    auto* c_pot = app.add_subcommand("potential",
                                     "effective heavy-heavy potential profile (CSV)");
    add_common(c_pot, true);
    c_pot->add_option("--r-min", r_min, "grid start")->capture_default_str();
    c_pot->add_option("--r-max", r_max, "grid end")->capture_default_str();
    c_pot->add_option("--points", points, "log-spaced grid size")
        ->capture_default_str();
    c_pot->add_option("--thresholds", thresholds,
                      "number of trimer-threshold columns")
        ->capture_default_str();
    c_pot->add_option("--b3-ground", b3_ground,
                      "ground trimer binding for threshold columns / counting")
        ->capture_default_str();

    std::string method = "numerov";
    int grid_size = 2000;
    bool interwoven = false;
    auto* c_spec = app.add_subcommand("spectrum", "bound-state ladder (JSON)");
    add_common(c_spec, true);
    c_spec->add_option("--r-short", o.r_short, "short-range wall")
        ->capture_default_str();
    c_spec->add_option("--r-long", o.r_long, "long-range cutoff")
        ->capture_default_str();
    c_spec->add_option("--max-levels", o.max_levels, "levels to compute")
        ->capture_default_str();
    c_spec->add_option("--method", method, "numerov|bessel|fd")
        ->capture_default_str();
    c_spec->add_option("--grid-size", grid_size, "fd oracle interior points")
        ->capture_default_str();
    c_spec->add_flag("--interwoven", interwoven,
                     "assemble the interwoven multi-N spectrum");
    c_spec->add_option("--b3-ground", b3_ground, "trimer ground binding (interwoven)")
        ->capture_default_str();

    std::vector<double> rc_list;
    auto* c_curve = app.add_subcommand("scaling-curve",
                                       "level-ratio scaling curve vs cutoff (CSV)");
    add_common(c_curve, true);
    c_curve->add_option("--r-short", o.r_short, "short-range wall")
        ->capture_default_str();
    c_curve->add_option("--rc-list", rc_list, "long-range cutoffs")
        ->delimiter(',');

    auto* c_count = app.add_subcommand("count-levels",
                                       "level-count estimates (N = 3 or 4)");
    add_common(c_count, true);
    c_count->add_option("--r-short", o.r_short, "short-range scale r1/r2")
        ->capture_default_str();
    c_count->add_option("--b3-ground", b3_ground, "parent trimer binding (N = 4)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (c_const->parsed()) return cmd_constants(o);
        if (c_table->parsed()) return cmd_table(which, o);
        if (c_pot->parsed()) {
            if (!o.unitary && o.a == 0.0)
                throw CliError{kExitConfig,
                               "pass --unitary or a nonzero --scattering-length"};
            return cmd_potential(o, r_min, r_max, points, thresholds, b3_ground);
        }
        if (c_spec->parsed()) return cmd_spectrum(o, method, grid_size, interwoven,
                                                  b3_ground);
        if (c_curve->parsed()) return cmd_scaling_curve(o, rc_list);
        if (c_count->parsed()) return cmd_count_levels(o, b3_ground);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.msg.c_str());
        return e.code;
    }
    return 0;
}
