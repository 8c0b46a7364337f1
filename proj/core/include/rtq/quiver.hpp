/**
 * @file quiver.hpp
 * @brief Assembly of the quiver-form data (S, A, T, K, Q) from winding
 *        numbers, the independent Conf^2 route to Q, and the almost-quiver
 *        index reduction.
 *
 * With Z the middle puncture, omega the arc-maximal intersection and
 * delta_{i,A}/delta_{i,I} the active/inactive indicators:
 *
 *   S_i = Psi_{X+-,Y}([gamma_i]) + d_{i,A} d_{w,I} - d_{i,I} d_{w,A}
 *   A_i = 2 Psi_{X+}([gamma_i]) + d_{Z,X+} (d_{i,A} d_{w,I} - d_{i,I} d_{w,A})
 *   T_i = -S_i
 *   Q_ii = (Psi_{X-,Y} - 3 Psi_{X+})([gamma_i])
 *          + 2 d_{Z,X+} (d_{i,I} d_{w,A} - d_{i,A} d_{w,I})
 *   Q_ij = Q_ii + (Phi - 2 Psi_{X+})([gamma_{j,i}])
 *          + d_{Z,X+} (d_{i,A} d_{j,I} - d_{j,A} d_{i,I})
 *
 * where Phi on gamma_{j,i} is the braid abelianization of its
 * configuration-space companion. The single-formula route computes every
 * entry as (2 Phi^2 - Psi^2_{X+})([gamma^2_{j,i}]) plus a six-term delta
 * correction; both routes must agree entrywise.
 */
#pragma once

#include "rtq/arc_diagram.hpp"
#include "rtq/tangle.hpp"

#include <string>
#include <vector>

namespace rtq {

struct QuiverData {
    Fraction tangle;
    TangleState state;
    bool reduced = false;
    std::vector<int> basis;  ///< retained standard indices, ascending
    std::vector<int> K;      ///< 0/1; all zero when unreduced
    std::vector<int> S;
    std::vector<int> A;
    std::vector<int> T;
    std::vector<std::vector<int>> Q;

    int size() const { return static_cast<int>(basis.size()); }
    /// Position of a standard index inside the basis (-1 if dropped).
    int position_of(int standard_index) const;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_pretty() const;
};

/// Full quiver data in the standard ordering (Theorem route).
QuiverData compute_quiver(const ArcDiagram& d);

/// Q recomputed purely from second-configuration-space loops; must equal
/// compute_quiver(d).Q entrywise.
std::vector<std::vector<int>> compute_q_conf2(const ArcDiagram& d);

/// Almost-quiver reduction: drops the X member of every pair (the one whose
/// S is larger by one), keeps Y and Z with K = 1 on Y. Throws
/// ConstructionFailure when a pair violates the pairing relations.
QuiverData reduce_almost(const QuiverData& qd, const BlockPartition& bp);

/// Closed-form data for tau_{n/1}: the full data in the arc ordering and
/// the reduced data in the inside-out ordering used by the worked examples.
/// Serves as an independent expected-value generator for tests.
struct ClosedFormN1 {
    QuiverData full;     ///< basis labels are arc ranks 1..n+1
    QuiverData reduced;  ///< basis labels follow the worked examples
};
ClosedFormN1 closed_form_n1(int n);

}  // namespace rtq
