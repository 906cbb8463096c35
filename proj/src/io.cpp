/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#include "hhl/io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace hhl::io {

namespace {

void put_num(std::ostream& os, double v, int precision) {
    os << fmt_g(v, precision);
}

void put_num_or_null(std::ostream& os, double v, int precision) {
    if (std::isnan(v))
        os << "null";
    else
        os << fmt_g(v, precision);
}

void ladder_json(std::ostream& os, const EnergyLadder& l, int precision,
                 const std::string& indent) {
    os << "{\n";
    os << indent << "  \"method\": \"" << to_string(l.method) << "\",\n";
    os << indent << "  \"s\": ";
    put_num_or_null(os, l.s, precision);
    os << ",\n" << indent << "  \"r_short\": ";
    put_num_or_null(os, l.r_short, precision);
    os << ",\n" << indent << "  \"r_long\": ";
    put_num_or_null(os, l.r_long, precision);
    os << ",\n" << indent << "  \"levels\": [";
    for (size_t n = 0; n < l.levels.size(); ++n) {
        os << (n ? "," : "") << "\n" << indent << "    {\"n\": " << n << ", \"B\": "
           << fmt_g(l.levels[n], precision) << ", \"nodes\": " << l.node_counts[n]
           << "}";
    }
    if (!l.levels.empty()) os << "\n" << indent << "  ";
    os << "]\n" << indent << "}";
}

}  // namespace

std::string fmt_g(double v, int precision) {
    precision = std::clamp(precision, 1, 17);
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", precision, v);
    return buf.data();
}

void write_profile_csv(std::ostream& os, const PotentialProfile& p, int precision,
                       std::span<const double> extra_thresholds) {
    os << "R,E_eff,threshold";
    for (size_t j = 0; j < extra_thresholds.size(); ++j) os << ",thr_" << j;
    os << "\n";
    for (size_t i = 0; i < p.grid.size(); ++i) {
        put_num(os, p.grid[i], precision);
        os << ",";
        put_num(os, p.values[i], precision);
        os << ",";
        put_num(os, p.threshold, precision);
        for (double t : extra_thresholds) {
            os << ",";
            put_num(os, t, precision);
        }
        os << "\n";
    }
}

PotentialProfile parse_profile_csv(std::istream& is) {
    PotentialProfile p;
    std::string line;
    if (!std::getline(is, line)) raise(errc::io, "empty profile CSV");
    bool have_threshold = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::array<double, 3> v{};
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(row, cell, ','))
                raise(errc::io, "profile CSV row with fewer than 3 columns");
            v[c] = std::strtod(cell.c_str(), nullptr);
        }
        p.grid.push_back(v[0]);
        p.values.push_back(v[1]);
        p.threshold = v[2];
        have_threshold = true;
    }
    if (!have_threshold) raise(errc::io, "profile CSV carries no data rows");
    return p;
}

void write_ladder_json(std::ostream& os, const EnergyLadder& l, int precision) {
    ladder_json(os, l, precision, "");
    os << "\n";
}

void write_interwoven_json(std::ostream& os, const InterwovenSpectrum& sp,
                           int precision) {
    os << "{\n  \"mass_ratio\": " << fmt_g(sp.mass_ratio, precision) << ",\n";
    os << "  \"s0\": {\"s\": " << fmt_g(sp.s0.s, precision) << ", \"source\": \""
       << to_string(sp.s0.source) << "\"},\n";
    os << "  \"s_n\": [";
    for (size_t k = 0; k < sp.s_n.size(); ++k)
        os << (k ? ", " : "") << "{\"n_bosons\": " << sp.s_n[k].n_bosons
           << ", \"s\": " << fmt_g(sp.s_n[k].s, precision) << "}";
    os << "],\n";
    os << "  \"trimer\": ";
    ladder_json(os, sp.trimer, precision, "  ");
    os << ",\n  \"tetramer\": [";
    for (size_t j = 0; j < sp.tetramer.size(); ++j) {
        const auto& al = sp.tetramer[j];
        os << (j ? "," : "") << "\n    {\"parent_level\": " << al.parent_level
           << ", \"threshold_B\": " << fmt_g(al.parent_B, precision)
           << ", \"ladder\": ";
        ladder_json(os, al.ladder, precision, "    ");
        os << "}";
    }
    if (!sp.tetramer.empty()) os << "\n  ";
    os << "],\n  \"higher\": [";
    for (size_t j = 0; j < sp.higher.size(); ++j) {
        const auto& [N, al] = sp.higher[j];
        os << (j ? "," : "") << "\n    {\"n_bosons\": " << N
           << ", \"threshold_B\": " << fmt_g(al.parent_B, precision)
           << ", \"ladder\": ";
        ladder_json(os, al.ladder, precision, "    ");
        os << "}";
    }
    if (!sp.higher.empty()) os << "\n  ";
    os << "]\n}\n";
}

void write_curve_csv(std::ostream& os, const ScalingCurve& c, int precision,
                     std::span<const double> reference_fixed_points) {
    os << "Rc,X,Y,fixed_point\n";
    for (const auto& pt : c.points) {
        put_num(os, pt.rc, precision);
        os << ",";
        put_num(os, pt.X, precision);
        os << ",";
        put_num(os, pt.Y, precision);
        os << ",";
        put_num(os, c.fixed_point, precision);
        os << "\n";
    }
    // Analytic Y = X markers, flagged by Rc = 0 (never a valid cutoff).
    for (double fp : reference_fixed_points) {
        os << "0," << fmt_g(fp, precision) << "," << fmt_g(fp, precision) << ","
           << fmt_g(fp, precision) << "\n";
    }
}

namespace {

constexpr std::array<double, 7> kT1A = {0.1, 0.05, 0.04, 0.03, 0.02, 0.01, 0.001};
constexpr std::array<double, 7> kT1s3 = {1.1995, 1.7456, 1.9624, 2.2784,
                                         2.8057, 3.9891, 12.675};
constexpr std::array<double, 7> kT1s0 = {1.4682, 1.9194, 2.1142, 2.4067,
                                         2.9084, 4.0612, 12.698};
constexpr std::array<double, 7> kT1e3 = {13.725, 6.0483, 4.9574, 3.9703,
                                         3.0641, 2.1980, 1.2813};
constexpr std::array<double, 7> kT1e0 = {8.4977, 5.1383, 4.4193, 3.6889,
                                         2.9452, 2.1675, 1.2807};

constexpr std::array<double, 5> kT2A = {0.04, 0.03, 0.02, 0.01, 0.001};
constexpr std::array<std::array<double, 5>, 4> kT2 = {{
    {19.5, 13.6, 8.67, 4.70, 1.64},  // e^{2pi/s0}
    {7.95, 6.21, 4.57, 2.97, 1.42},  // e^{2pi/s4}
    {5.39, 4.42, 3.44, 2.43, 1.33},  // e^{2pi/s5}
    {4.29, 3.61, 2.91, 2.16, 1.28},  // e^{2pi/s6}
}};

std::string row_label(const std::string& name) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%-14s", name.c_str());
    return buf.data();
}

std::string cell(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%10.4f", v);
    return buf.data();
}

}  // namespace

std::string render_table(int which) {
    std::ostringstream os;
    if (which == 1) {
        os << row_label("A");
        for (double A : kT1A) os << cell(A);
        os << "\n";
        os << row_label("s3 (computed)");
        for (double A : kT1A) os << cell(adiabatic_s(A, 3).s);
        os << "\n" << row_label("s3 (ref)");
        for (double v : kT1s3) os << cell(v);
        os << "\n" << row_label("deviation");
        for (size_t i = 0; i < kT1A.size(); ++i)
            os << cell(adiabatic_s(kT1A[i], 3).s - kT1s3[i]);
        os << "\n" << row_label("e^(pi/s3)");
        for (double A : kT1A) os << cell(geometric_ratio(adiabatic_s(A, 3).s, true));
        os << "\n" << row_label("e^(pi/s3) ref");
        for (double v : kT1e3) os << cell(v);
        os << "\n" << row_label("deviation");
        for (size_t i = 0; i < kT1A.size(); ++i)
            os << cell(geometric_ratio(adiabatic_s(kT1A[i], 3).s, true) - kT1e3[i]);
        os << "\n" << row_label("s0 (ref)");
        for (double v : kT1s0) os << cell(v);
        os << "\n" << row_label("deviation");
        for (size_t i = 0; i < kT1A.size(); ++i)
            os << cell(reference_s0_or_throw(kT1A[i]) - kT1s0[i]);
        os << "\n" << row_label("e^(pi/s0)");
        for (double v : kT1s0) os << cell(geometric_ratio(v, true));
        os << "\n" << row_label("e^(pi/s0) ref");
        for (double v : kT1e0) os << cell(v);
        os << "\n";
        return os.str();
    }
    if (which == 2) {
        os << row_label("A");
        for (double A : kT2A) os << cell(A);
        os << "\n" << row_label("s0 (ref)");
        for (double A : kT2A) os << cell(reference_s0_or_throw(A));
        os << "\n";
        const std::array<std::string, 4> names = {"e^(2pi/s0)", "e^(2pi/s4)",
                                                  "e^(2pi/s5)", "e^(2pi/s6)"};
        for (int row = 0; row < 4; ++row) {
            const int N = row + 3;
            os << row_label(names[row]);
            std::array<double, 5> computed{};
            for (size_t i = 0; i < kT2A.size(); ++i) {
                const double s0 = reference_s0_or_throw(kT2A[i]);
                const double s = N == 3 ? s0 : hybrid_s(s0, N).s;
                computed[i] = geometric_ratio(s);
                os << cell(computed[i]);
            }
            os << "\n" << row_label("  (ref)");
            for (double v : kT2[row]) os << cell(v);
            os << "\n" << row_label("  deviation");
            for (size_t i = 0; i < kT2A.size(); ++i) os << cell(computed[i] - kT2[row][i]);
            os << "\n";
        }
        return os.str();
    }
    raise(errc::invalid_argument, "table id must be 1 or 2");
}

void write_text_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) raise(errc::io, "cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) raise(errc::io, "write to '" + path + "' failed");
}

}  // namespace hhl::io
