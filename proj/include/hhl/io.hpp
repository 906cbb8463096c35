/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_IO_HPP
#define HHL_IO_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "hhl/adiabatic.hpp"
#include "hhl/radial.hpp"
#include "hhl/spectrum.hpp"

namespace hhl::io {

// Deterministic export: fixed %.{precision}g formatting, '.' decimal point,
// stable key order, no timestamps.  Identical inputs give identical bytes.

std::string fmt_g(double v, int precision);

/// CSV columns R,E_eff,threshold plus one constant column per entry of
/// extra_thresholds (Fig.-1-style dissociation lines).
void write_profile_csv(std::ostream& os, const PotentialProfile& p, int precision,
                       std::span<const double> extra_thresholds = {});
PotentialProfile parse_profile_csv(std::istream& is);

/// {method, s, r_short, r_long, levels:[{n, B, nodes}]}
void write_ladder_json(std::ostream& os, const EnergyLadder& l, int precision);

void write_interwoven_json(std::ostream& os, const InterwovenSpectrum& sp, int precision);

/// CSV columns Rc,X,Y,fixed_point.  With reference_rows, trailing rows with
/// Rc = 0 carry the analytic fixed points e^{2 pi/s_N} for N = 3..8.
void write_curve_csv(std::ostream& os, const ScalingCurve& c, int precision,
                     std::span<const double> reference_fixed_points = {});

/// Scaling-factor tables (computed columns next to reference values with
/// per-cell deviations).  which: 1 = s3 table, 2 = e^{2 pi/s_N} table.
std::string render_table(int which);

/// Writes to a file, or to stdout when path == "-".  Throws errc::io.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hhl::io

#endif
