#include "rtq/geom.hpp"

namespace rtq {

namespace {

int sign(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// Orientation of the triple (a, b, c): sign of the cross product.
int orient(const Pt& a, const Pt& b, const Pt& c) {
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool bbox_overlap(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    auto mm = [](const Rat& p, const Rat& q) { return p < q ? std::pair{p, q} : std::pair{q, p}; };
    auto [ax0, ax1] = mm(a.x, b.x);
    auto [cx0, cx1] = mm(c.x, d.x);
    if (ax1 < cx0 || cx1 < ax0) return false;
    auto [ay0, ay1] = mm(a.y, b.y);
    auto [cy0, cy1] = mm(c.y, d.y);
    return !(ay1 < cy0 || cy1 < ay0);
}

// Proper or improper intersection of closed segments [a,b] and [c,d].
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (!bbox_overlap(a, b, c, d)) return false;
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    auto on = [](const Pt& p, const Pt& q, const Pt& r) {
        // r collinear with pq assumed; is r within the box?
        auto between = [](const Rat& lo, const Rat& hi, const Rat& v) {
            return (lo <= v && v <= hi) || (hi <= v && v <= lo);
        };
        return between(p.x, q.x, r.x) && between(p.y, q.y, r.y);
    };
    if (o1 == 0 && on(a, b, c)) return true;
    if (o2 == 0 && on(a, b, d)) return true;
    if (o3 == 0 && on(c, d, a)) return true;
    if (o4 == 0 && on(c, d, b)) return true;
    return false;
}

}  // namespace

Pt lerp(const Pt& a, const Pt& b, const Rat& s) {
    return Pt{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

int ray_crossings(const Polyline& path, const Pt& p) {
    int total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Pt& a = path[i];
        const Pt& b = path[i + 1];
        if (a.x == b.x) {
            if (a.x == p.x && (a.y < p.y || b.y < p.y)) {
                throw ConstructionFailure("ray_crossings: segment along the ray");
            }
            continue;
        }
        if (a.x == p.x && a.y < p.y) throw ConstructionFailure("ray_crossings: vertex on ray");
        if (b.x == p.x && b.y < p.y) throw ConstructionFailure("ray_crossings: vertex on ray");
        bool crosses = (a.x < p.x && p.x < b.x) || (b.x < p.x && p.x < a.x);
        if (!crosses) continue;
        Rat s = (p.x - a.x) / (b.x - a.x);
        Rat y = a.y + s * (b.y - a.y);
        if (y == p.y) throw ConstructionFailure("ray_crossings: crossing through the puncture");
        if (y < p.y) total += (a.x < b.x) ? 1 : -1;
    }
    return total;
}

int line_crossings_signed(const Polyline& path, const Rat& c) {
    int total = 0;
    for (const auto& hit : vertical_hits(path, c)) total += hit.dir;
    return total;
}

int line_crossings(const Polyline& path, const Rat& c) {
    return static_cast<int>(vertical_hits(path, c).size());
}

std::vector<VerticalHit> vertical_hits(const Polyline& path, const Rat& c) {
    std::vector<VerticalHit> hits;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Pt& a = path[i];
        const Pt& b = path[i + 1];
        if (a.x == c || b.x == c) {
            if (a.x == c && b.x == c) continue;  // segment on the line: no transversal crossing
            throw ConstructionFailure("vertical_hits: vertex on the line");
        }
        bool crosses = (a.x < c && c < b.x) || (b.x < c && c < a.x);
        if (!crosses) continue;
        Rat s = (c - a.x) / (b.x - a.x);
        hits.push_back(VerticalHit{a.y + s * (b.y - a.y), i, s, a.x < b.x ? 1 : -1});
    }
    return hits;
}

bool polyline_is_simple(const Polyline& path) {
    if (path.size() < 2) return true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (std::size_t j = i + 2; j + 1 < path.size(); ++j) {
            if (segments_intersect(path[i], path[i + 1], path[j], path[j + 1])) return false;
        }
    }
    return true;
}

}  // namespace rtq
