/**
 * @file arc_diagram.hpp
 * @brief Exact planar realization of D(tau_{u/v}): punctures, the arc, the
 *        two vertical axes, and the intersection bookkeeping.
 *
 * The arc is constructed upstairs in the branched double cover, where it is
 * a straight segment between two ramification points, and then redrawn in
 * the plane as a system of nested polyline arches. Every crossing count and
 * winding number downstream reduces to exact signed ray crossings with zero
 * degeneracy.
 *
 * Standard ordering: active intersections (on l_A) carry indices 1..u by
 * increasing height, inactive (on l_I) carry u+1..u+v. The arc ordering
 * (the "comes before along alpha from X-" order) is kept alongside; its
 * maximum is omega.
 */
#pragma once

#include "rtq/geom.hpp"
#include "rtq/tangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace rtq {

struct IntersectionPoint {
    int standard_index = 0;  ///< 1..u+v
    bool active = false;     ///< true when on l_A
    int height_rank = 0;     ///< 1-based, bottom-to-top along its vertical
    int arc_rank = 0;        ///< 1-based position along alpha from X-
    Pt coords;
    std::size_t seg = 0;     ///< alpha segment carrying the point
    Rat s;                   ///< parameter within that segment
};

/// Maximal pairing of arc-consecutive same-vertical points capped around Y
/// (Lemma 5.1/5.2 configurations). Pairs hold standard indices ordered by
/// arc rank; which member belongs to the X block is decided later from S.
struct BlockPartition {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> z_indices;  ///< standard indices in no pair
};

class ArcDiagram {
public:
    /// Builds D(tau_{u/v}). Throws ConstructionFailure when an internal
    /// convention invariant breaks (never a user error).
    static ArcDiagram build(const Fraction& f);

    const Fraction& fraction() const { return f_; }
    const TangleState& state() const { return state_; }
    int u() const { return static_cast<int>(f_.u); }
    int v() const { return static_cast<int>(f_.v); }
    int total() const { return n_; }

    /// Puncture positions left to right (on the real axis).
    const std::array<Pt, 3>& punctures() const { return punctures_; }
    /// Roles left to right, matching punctures().
    const std::array<PunctureRole, 3>& roles() const { return roles_; }
    Pt puncture(PunctureRole role) const;
    /// Middle puncture's role (the paper's Z).
    PunctureRole middle_role() const { return roles_[1]; }

    /// Arc polyline, oriented from the X- puncture to the X+ puncture.
    const Polyline& alpha() const { return alpha_; }
    const Rat& x_active() const { return x_active_; }
    const Rat& x_inactive() const { return x_inactive_; }

    /// Intersection points by standard index (1-based).
    const IntersectionPoint& xi(int standard_index) const;
    const std::vector<IntersectionPoint>& xis() const { return xi_; }
    /// Standard indices sorted by arc rank; the last entry is omega.
    std::vector<int> arc_order() const;
    int omega() const { return omega_; }

    /// Height of the horizontal leg of simple slides (above all arc
    /// material) and the base push-off scale for configuration-space loops.
    const Rat& slide_height() const { return slide_height_; }
    const Rat& push_scale() const { return push_scale_; }

    BlockPartition partition_xyz() const;

    std::string emit_svg() const;
    std::string dump_json() const;

private:
    ArcDiagram() = default;

    Fraction f_;
    TangleState state_;
    int n_ = 0;
    std::array<Pt, 3> punctures_;
    std::array<PunctureRole, 3> roles_;
    Polyline alpha_;
    Rat x_active_;
    Rat x_inactive_;
    std::vector<IntersectionPoint> xi_;
    int omega_ = 0;
    Rat slide_height_;
    Rat push_scale_;
};

}  // namespace rtq
