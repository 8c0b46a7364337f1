/**
 * @file geom.hpp
 * @brief Exact rational plane geometry for arc diagrams and loops.
 *
 * Everything is computed over arbitrary-precision rationals. The parity and
 * sign of every crossing is decided exactly: degenerate configurations are
 * construction failures, never silently perturbed.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rtq {

using Rat = boost::multiprecision::cpp_rational;

struct Pt {
    Rat x;
    Rat y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

/// Open polyline (closed polylines repeat the first vertex last).
using Polyline = std::vector<Pt>;

/// Thrown when a diagram or loop hits a degenerate configuration that the
/// construction invariants were supposed to exclude.
struct ConstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Signed crossings of the open path with the downward vertical ray from p
/// (the set {(p.x, y) : y < p.y}). A segment crossing the ray left-to-right
/// counts +1, right-to-left -1; with this convention a counter-clockwise
/// circle around p has total +1. Vertices on the ray or segments along it
/// are ConstructionFailures.
int ray_crossings(const Polyline& path, const Pt& p);

/// Signed crossing number of path with the full vertical line x = c
/// (+1 left-to-right). Vertices exactly on the line are failures.
int line_crossings_signed(const Polyline& path, const Rat& c);

/// Unsigned count of crossings with the vertical line x = c.
int line_crossings(const Polyline& path, const Rat& c);

struct VerticalHit {
    Rat y;          ///< y-coordinate of the crossing
    std::size_t seg;///< index of the polyline segment carrying it
    Rat s;          ///< parameter in (0,1) along that segment
    int dir;        ///< +1 if the path crosses left-to-right
};

/// All crossings of the path with the vertical line x = c, in path order.
std::vector<VerticalHit> vertical_hits(const Polyline& path, const Rat& c);

/// True if the open polyline is simple (no self-intersections besides the
/// shared endpoints of consecutive segments).
bool polyline_is_simple(const Polyline& path);

/// Point at parameter s in [0,1] along segment (a, b).
Pt lerp(const Pt& a, const Pt& b, const Rat& s);

}  // namespace rtq
