/**
 * @file series_check.hpp
 * @brief Expansion of (almost-)quiver data at a fixed color and comparison
 *        with the twist-rule oracle up to a single trigrading shift.
 *
 * The color-j slice of the quiver form is
 *
 *   sum_{|d| = j} q^{S.d + d.Q.d} a^{A.d} t^{T.d}
 *       [sum d_act; d_act] [sum d_inact; d_inact] X[j, sum d_act],
 *
 * the almost-quiver slice carries the extra factor (-t^{-1}q^2;q^2)_{K.d}
 * (or (q^2;q^2)_{K.d} after t -> -1).
 */
#pragma once

#include "rtq/laurent.hpp"
#include "rtq/quiver.hpp"
#include "rtq/skein.hpp"
#include "rtq/tangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtq {

/// Whether the expansion keeps the homological grading or specializes to
/// the t = -1 skein form (-q)^{S.d} q^{d.Q.d} a^{A.d}.
enum class ExpandMode { Graded, Specialized };

/// Color-j slice of the full quiver form; requires unreduced data whose
/// basis is the full standard ordering (actives first).
WebPoly expand_quiver_form(const QuiverData& qd, int j, ExpandMode mode = ExpandMode::Graded);

/// Color-j slice of the almost-quiver form; requires reduced data.
WebPoly expand_almost_form(const QuiverData& qd, int j, ExpandMode mode = ExpandMode::Graded);

struct ShiftResult {
    bool ok = false;
    Exp3 shift;           ///< a == q^x a^y t^z * b when ok
    std::string mismatch; ///< first difference otherwise
};

/// Finds the unique monomial mu with a == mu * b, or reports the first
/// structural difference.
ShiftResult compare_up_to_shift(const WebPoly& a, const WebPoly& b);

struct VerifyRecord {
    Fraction tangle;
    int color = 0;
    bool ok = false;
    Exp3 shift;
    std::string detail;
};

/// Oracle-vs-expansion comparison for one tangle and color.
VerifyRecord verify_tangle_color(const ArcDiagram& d, const QuiverData& qd, int j);

/// Sweep over all coprime u/v with u+v <= max_total and colors 0..jmax.
std::vector<VerifyRecord> verify_sweep(int max_total, int jmax);

/// One JSON line per record: {"tangle","j","status","shift":[x,y,z]} on
/// success, {"tangle","j","status","detail"} on mismatch.
std::string to_json_line(const VerifyRecord& r);

/// All coprime fractions u/v (including 0/1) with u+v <= max_total.
std::vector<Fraction> coprime_fractions(int max_total);

}  // namespace rtq
