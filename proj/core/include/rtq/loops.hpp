/**
 * @file loops.hpp
 * @brief The paper's explicit loops and the four homomorphisms.
 *
 * Loops in the 3-punctured plane M are closed polylines; Psi_W sums exact
 * winding numbers about the punctures in W. Loops in the second
 * configuration space are move schedules in which exactly one of the two
 * components traverses one polyline at a time; Phi^2 is the abelianization
 * of the 2-strand braid read off from the schedule, and Psi^2_{X+} is
 * recovered as Phi^2 plus twice the total winding of both components about
 * X+.
 *
 * Braid crossings are detected through an infinitesimally sheared x-order
 * so that points sharing a vertical still have a well-defined strand order;
 * genuine coincidences are construction failures.
 */
#pragma once

#include "rtq/arc_diagram.hpp"
#include "rtq/geom.hpp"
#include "rtq/tangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace rtq {

/// Closed polyline in the punctured plane (first vertex == last vertex).
using PlanarLoop = Polyline;

/// Signed winding number of the closed loop about p.
int winding(const PlanarLoop& loop, const Pt& p);
/// |winding|; convenience for cap tests.
int abs_winding(const PlanarLoop& loop, const Pt& p);

/// Psi_W: sum of windings about the punctures whose roles lie in W.
int psi(const ArcDiagram& d, const std::vector<PunctureRole>& W, const PlanarLoop& loop);

/// gamma_{i,j}: along alpha from xi_i to xi_j, back via the vertical
/// (through the tops and a simple slide when the points sit on different
/// verticals). gamma_i is gamma_{i,omega}.
PlanarLoop loop_gamma_pair(const ArcDiagram& d, int i, int j);
PlanarLoop loop_gamma(const ArcDiagram& d, int i);

/// One elementary move of a two-point configuration: component comp
/// traverses path while the other stands still.
struct Loop2Move {
    int comp = 0;
    Polyline path;
};

/// A loop in Conf^2(M): a start configuration and a move schedule. The
/// final configuration must equal the initial one as a set (the components
/// may swap).
struct Loop2 {
    std::array<Pt, 2> start;
    std::vector<Loop2Move> moves;
};

/// Braid abelianization of the schedule (positive crossings minus negative).
int phi2(const Loop2& loop);
/// Total signed winding of both components about p.
int total_winding2(const Loop2& loop, const Pt& p);
/// Psi^2_{X+} = Phi^2 + 2 * (total winding of both components about X+).
int psi2_xplus(const ArcDiagram& d, const Loop2& loop);
/// Debug rendering of the 2-strand braid word, e.g. "s s s^-1".
std::string loop2_braid_word(const Loop2& loop);

/// tilde gamma_{i,j}: the configuration-space companion of gamma_{i,j};
/// its component chains sum to gamma_{i,j} in first homology.
Loop2 loop_tilde(const ArcDiagram& d, int i, int j);
/// hat gamma_{i,j}: the variant based at the swapped configuration; only
/// defined for same-vertical pairs (std::invalid_argument otherwise).
Loop2 loop_hat(const ArcDiagram& d, int i, int j);
/// s_{i,j} and hat s_{i,j}: elementary swap loops on one vertical with
/// Phi = +1 and -1 respectively; same-vertical pairs only.
Loop2 loop_s(const ArcDiagram& d, int i, int j);
Loop2 loop_s_hat(const ArcDiagram& d, int i, int j);
/// gamma^2_{i,j} = eta^2_{i,j;j} . eta^2_{j;omega} . bar-eta^2_{omega;i,j}:
/// the parallel-copy loop used by the single-formula computation of Q.
Loop2 loop_conf2(const ArcDiagram& d, int i, int j);

}  // namespace rtq
