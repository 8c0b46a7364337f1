#include "rtq/loops.hpp"

#include "conventions.hpp"

#include <algorithm>
#include <sstream>

namespace rtq {

namespace {

int sign(const Rat& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

/// Position along the arc polyline: segment index plus parameter in (0,1).
struct AlphaPos {
    std::size_t seg = 0;
    Rat s;
};

bool pos_less(const AlphaPos& a, const AlphaPos& b) {
    return a.seg != b.seg ? a.seg < b.seg : a.s < b.s;
}

Pt point_at(const ArcDiagram& d, const AlphaPos& p) {
    const auto& a = d.alpha();
    return lerp(a[p.seg], a[p.seg + 1], p.s);
}

AlphaPos xi_pos(const ArcDiagram& d, int k) {
    const auto& p = d.xi(k);
    return AlphaPos{p.seg, p.s};
}

/// Subpath of alpha from one position to another, in either direction.
Polyline alpha_subpath(const ArcDiagram& d, const AlphaPos& from, const AlphaPos& to) {
    const auto& a = d.alpha();
    Polyline out;
    out.push_back(point_at(d, from));
    if (pos_less(from, to)) {
        for (std::size_t v = from.seg + 1; v <= to.seg; ++v) out.push_back(a[v]);
    } else if (pos_less(to, from)) {
        for (std::size_t v = from.seg; v > to.seg; --v) out.push_back(a[v]);
    }
    Pt last = point_at(d, to);
    if (!(out.back() == last)) out.push_back(last);
    return out;
}

/// x-direction of the alpha segment carrying xi_k (never vertical).
int seg_dx_sign(const ArcDiagram& d, int k) {
    const auto& p = d.xi(k);
    const auto& a = d.alpha();
    int s = sign(a[p.seg + 1].x - a[p.seg].x);
    if (s == 0) throw ConstructionFailure("intersection on a vertical arc segment");
    return s;
}

/// Point on alpha near xi_k with x displaced to the requested side of the
/// vertical, |dx| = mult * push_scale.
AlphaPos pushed_pos(const ArcDiagram& d, int k, int geo_side, int mult) {
    const auto& p = d.xi(k);
    const auto& a = d.alpha();
    Rat dx = a[p.seg + 1].x - a[p.seg].x;
    Rat want = Rat(geo_side * mult) * d.push_scale();
    Rat s2 = p.s + want / dx;
    if (!(s2 > 0 && s2 < 1)) throw ConstructionFailure("push-off escapes its segment");
    return AlphaPos{p.seg, s2};
}

/// Same, displaced along the arc parameter (param_dir = +-1).
AlphaPos pushed_pos_by_param(const ArcDiagram& d, int k, int param_dir, int mult) {
    return pushed_pos(d, k, param_dir * seg_dx_sign(d, k), mult);
}

Rat vert_x(const ArcDiagram& d, int k) {
    return d.xi(k).active ? d.x_active() : d.x_inactive();
}

Rat xi_y(const ArcDiagram& d, int k) { return d.xi(k).coords.y; }

/// Off-arc return path from xi_j to xi_i: down the shared vertical, or over
/// the tops through a simple slide above all arc material.
Polyline vertical_return(const ArcDiagram& d, int j, int i) {
    Rat xj = vert_x(d, j);
    Rat xi_ = vert_x(d, i);
    Polyline out;
    out.push_back(Pt{xj, xi_y(d, j)});
    if (xj != xi_) {
        out.push_back(Pt{xj, d.slide_height()});
        out.push_back(Pt{xi_, d.slide_height()});
    }
    Pt last{xi_, xi_y(d, i)};
    if (!(out.back() == last)) out.push_back(last);
    return out;
}

struct Tracked {
    Pt pos;
    AlphaPos apos;  // meaningful only while the component rides the arc
};

void do_move(Loop2& loop, std::array<Tracked, 2>& st, int comp, Polyline path) {
    if (path.size() < 2) return;
    if (!(st[static_cast<std::size_t>(comp)].pos == path.front())) {
        throw ConstructionFailure("move does not start at the component position");
    }
    st[static_cast<std::size_t>(comp)].pos = path.back();
    loop.moves.push_back(Loop2Move{comp, std::move(path)});
}

void move_along_alpha(const ArcDiagram& d, Loop2& loop, std::array<Tracked, 2>& st, int comp,
                      const AlphaPos& to) {
    auto& t = st[static_cast<std::size_t>(comp)];
    Polyline path = alpha_subpath(d, t.apos, to);
    t.apos = to;
    do_move(loop, st, comp, std::move(path));
}

}  // namespace

int winding(const PlanarLoop& loop, const Pt& p) {
    if (loop.size() < 2) return 0;
    if (!(loop.front() == loop.back())) throw ConstructionFailure("winding: loop not closed");
    return ray_crossings(loop, p);
}

int abs_winding(const PlanarLoop& loop, const Pt& p) {
    int w = winding(loop, p);
    return w < 0 ? -w : w;
}

int psi(const ArcDiagram& d, const std::vector<PunctureRole>& W, const PlanarLoop& loop) {
    int total = 0;
    for (PunctureRole r : W) total += winding(loop, d.puncture(r));
    return total;
}

PlanarLoop loop_gamma_pair(const ArcDiagram& d, int i, int j) {
    if (i == j) return PlanarLoop{};
    Polyline out = alpha_subpath(d, xi_pos(d, i), xi_pos(d, j));
    Polyline back = vertical_return(d, j, i);
    out.insert(out.end(), back.begin() + 1, back.end());
    if (!(out.front() == out.back())) throw ConstructionFailure("gamma loop failed to close");
    return out;
}

PlanarLoop loop_gamma(const ArcDiagram& d, int i) { return loop_gamma_pair(d, i, d.omega()); }

namespace {

/// Sheared strand order: x first, ties broken by y ("higher is more to the
/// right" when conv::kShearUp).
int key_compare(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x ? -1 : 1;
    if (a.y == b.y) throw ConstructionFailure("coincident configuration points");
    bool less = conv::kShearUp ? (a.y < b.y) : (a.y > b.y);
    return less ? -1 : 1;
}

void collect_crossings(const Pt& q0, const Pt& q1, const Pt& still, std::vector<int>& out) {
    int c0 = key_compare(q0, still);
    int c1 = key_compare(q1, still);
    if (c0 == c1) return;
    if (q0.x == q1.x) {
        throw ConstructionFailure("configuration points collide on a vertical move");
    }
    Rat t = (still.x - q0.x) / (q1.x - q0.x);
    Rat y_at = q0.y + t * (q1.y - q0.y);
    if (y_at == still.y) throw ConstructionFailure("configuration points collide");
    int dir = c0 < c1 ? 1 : -1;  // mover passes left-to-right in sheared order
    bool mover_front = conv::kFrontIsLargerY ? (y_at > still.y) : (y_at < still.y);
    out.push_back(mover_front ? dir : -dir);
}

std::vector<int> braid_crossings(const Loop2& loop) {
    std::array<Pt, 2> pos = loop.start;
    std::vector<int> out;
    for (const auto& mv : loop.moves) {
        const Pt& still = pos[static_cast<std::size_t>(1 - mv.comp)];
        if (!(pos[static_cast<std::size_t>(mv.comp)] == mv.path.front())) {
            throw ConstructionFailure("schedule breaks continuity");
        }
        for (std::size_t i = 0; i + 1 < mv.path.size(); ++i) {
            collect_crossings(mv.path[i], mv.path[i + 1], still, out);
        }
        pos[static_cast<std::size_t>(mv.comp)] = mv.path.back();
    }
    bool closed_straight = pos[0] == loop.start[0] && pos[1] == loop.start[1];
    bool closed_swapped = pos[0] == loop.start[1] && pos[1] == loop.start[0];
    if (!closed_straight && !closed_swapped) {
        throw ConstructionFailure("configuration loop fails to close");
    }
    return out;
}

}  // namespace

int phi2(const Loop2& loop) {
    int total = 0;
    for (int c : braid_crossings(loop)) total += c;
    return total;
}

int total_winding2(const Loop2& loop, const Pt& p) {
    int total = 0;
    for (const auto& mv : loop.moves) total += ray_crossings(mv.path, p);
    return total;
}

int psi2_xplus(const ArcDiagram& d, const Loop2& loop) {
    return phi2(loop) + 2 * total_winding2(loop, d.puncture(PunctureRole::XPlus));
}

std::string loop2_braid_word(const Loop2& loop) {
    std::ostringstream os;
    bool first = true;
    for (int c : braid_crossings(loop)) {
        if (!first) os << ' ';
        first = false;
        os << (c > 0 ? "s" : "s^-1");
    }
    return os.str();
}

namespace {

/// Geometric side from which the alpha path from xi_i arrives at xi_j.
int approach_side(const ArcDiagram& d, int i, int j) {
    bool forward = pos_less(xi_pos(d, i), xi_pos(d, j));
    return forward ? -seg_dx_sign(d, j) : seg_dx_sign(d, j);
}

/// State of the shared first leg of the configuration-space loops. The
/// basepoint is the ordered pair of the standard ordering: the larger-index
/// member is pushed off its intersection to the side conv::kPushSide, the
/// smaller-index member sits exactly on it. Component 0 is always the point
/// starting at the xi_i site (the one that travels), so flip_order swaps
/// which site carries the push -- this is the hat basepoint.
struct PairLeg {
    std::array<Tracked, 2> st;
    std::array<Pt, 2> base;
    AlphaPos mover_base;
    bool mover_exact = true;
    bool swaps = false;
};

PairLeg eta2_start(const ArcDiagram& d, int i, int j, bool flip_order) {
    PairLeg leg;
    leg.mover_exact = (i <= j) != flip_order;
    AlphaPos mover = leg.mover_exact ? xi_pos(d, i) : pushed_pos(d, i, conv::kPushSide, 1);
    AlphaPos still = leg.mover_exact ? pushed_pos(d, j, conv::kPushSide, 1) : xi_pos(d, j);
    leg.st[0] = Tracked{point_at(d, mover), mover};
    leg.st[1] = Tracked{point_at(d, still), still};
    leg.base = {leg.st[0].pos, leg.st[1].pos};
    leg.mover_base = mover;
    return leg;
}

/// Carries the pair along alpha until the xi_j site changes hands or is
/// reached; records whether the components swapped.
void eta2_run(const ArcDiagram& d, Loop2& loop, PairLeg& leg, int i, int j) {
    if (i == j) return;
    if (leg.mover_exact) {
        if (approach_side(d, i, j) != conv::kPushSide) {
            move_along_alpha(d, loop, leg.st, 0, xi_pos(d, j));
            return;
        }
        // the path runs through the parked point: stop short and let it
        // take over the site
        move_along_alpha(d, loop, leg.st, 0, pushed_pos(d, j, conv::kPushSide, 2));
        move_along_alpha(d, loop, leg.st, 1, xi_pos(d, j));
        leg.swaps = true;
        return;
    }
    // The mover starts pushed while the resting point occupies xi_j
    // exactly, so the transport always splits: the mover stops short and
    // the resting point steps forward out of its way.
    int dirP = pos_less(xi_pos(d, i), xi_pos(d, j)) ? 1 : -1;
    move_along_alpha(d, loop, leg.st, 0, pushed_pos_by_param(d, j, -dirP, 2));
    move_along_alpha(d, loop, leg.st, 1, pushed_pos_by_param(d, j, dirP, 1));
    leg.swaps = true;
}

/// Closes a tilde/hat loop after eta2_run.
void close_pair_loop(const ArcDiagram& d, Loop2& loop, PairLeg& leg, int i, int j);

/// Off-track return: from near the departure intersection to the pushed
/// destination point, on a parallel copy of the vertical route offset by
/// half a push so it never meets the exact route.
Polyline offset_return(const ArcDiagram& d, const Pt& from, int dep, int dest,
                       const Pt& dest_point) {
    Rat off = d.push_scale() / 2;
    Rat bump = d.push_scale() / 4;
    Rat x_from = vert_x(d, dep);
    Rat x_to = vert_x(d, dest);
    Polyline path;
    path.push_back(from);
    path.push_back(Pt{from.x, xi_y(d, dep) + bump});
    path.push_back(Pt{x_from + off, xi_y(d, dep) + bump});
    if (x_from != x_to) {
        Rat h = d.slide_height() + bump;
        path.push_back(Pt{x_from + off, h});
        path.push_back(Pt{x_to + off, h});
    }
    path.push_back(Pt{x_to + off, xi_y(d, dest) + bump});
    path.push_back(Pt{dest_point.x, xi_y(d, dest) + bump});
    path.push_back(dest_point);
    Polyline clean;
    for (const auto& p : path) {
        if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
    }
    return clean;
}

void close_pair_loop(const ArcDiagram& d, Loop2& loop, PairLeg& leg, int i, int j) {
    if (!leg.swaps) {
        // component 0 sits exactly on xi_j: ride the vertical home
        do_move(loop, leg.st, 0, vertical_return(d, j, i));
        return;
    }
    if (leg.mover_exact) {
        // component 1 owns the xi_j site: it rides the exact vertical back
        // to xi_i while component 0 settles onto the parked position
        do_move(loop, leg.st, 1, vertical_return(d, j, i));
        move_along_alpha(d, loop, leg.st, 0, pushed_pos(d, j, conv::kPushSide, 1));
        return;
    }
    // the resting point returns to the mover's pushed base on the offset
    // track, then the mover claims the vacated xi_j site
    do_move(loop, leg.st, 1, offset_return(d, leg.st[1].pos, j, i, point_at(d, leg.mover_base)));
    move_along_alpha(d, loop, leg.st, 0, xi_pos(d, j));
}

Loop2 pair_loop(const ArcDiagram& d, int i, int j, bool flip_order) {
    Loop2 loop;
    PairLeg leg = eta2_start(d, i, j, flip_order);
    loop.start = leg.base;
    if (i == j) return loop;  // trivial companion loop
    eta2_run(d, loop, leg, i, j);
    close_pair_loop(d, loop, leg, i, j);
    return loop;
}

}  // namespace

Loop2 loop_tilde(const ArcDiagram& d, int i, int j) { return pair_loop(d, i, j, false); }

Loop2 loop_hat(const ArcDiagram& d, int i, int j) {
    if (d.xi(i).active != d.xi(j).active) {
        throw std::invalid_argument("loop_hat: points must share a vertical");
    }
    if (i == j) throw std::invalid_argument("loop_hat: need distinct points");
    return pair_loop(d, i, j, true);
}

namespace {

Loop2 swap_loop(const ArcDiagram& d, int i, int j, int bulge_side) {
    if (d.xi(i).active != d.xi(j).active) {
        throw std::invalid_argument("swap loop: points must share a vertical");
    }
    if (i == j) throw std::invalid_argument("swap loop: need distinct points");
    int lo = xi_y(d, i) < xi_y(d, j) ? i : j;
    int hi = lo == i ? j : i;
    Rat x = vert_x(d, lo);
    Rat ylo = xi_y(d, lo);
    Rat yhi = xi_y(d, hi);
    Pt bulge{x + Rat(bulge_side) * d.push_scale(), (ylo + yhi) / 2};

    Loop2 loop;
    loop.start = {Pt{x, ylo}, Pt{x, yhi}};
    loop.moves.push_back(Loop2Move{1, Polyline{Pt{x, yhi}, bulge}});
    loop.moves.push_back(Loop2Move{0, Polyline{Pt{x, ylo}, Pt{x, yhi}}});
    loop.moves.push_back(Loop2Move{1, Polyline{bulge, Pt{x, ylo}}});
    return loop;
}

}  // namespace

Loop2 loop_s(const ArcDiagram& d, int i, int j) {
    return swap_loop(d, i, j, conv::kSwapBulgeSide);
}

Loop2 loop_s_hat(const ArcDiagram& d, int i, int j) {
    return swap_loop(d, i, j, -conv::kSwapBulgeSide);
}

Loop2 loop_conf2(const ArcDiagram& d, int i, int j) {
    Loop2 loop;
    PairLeg leg = eta2_start(d, i, j, false);
    loop.start = leg.base;
    eta2_run(d, loop, leg, i, j);

    // Phase 2: parallel transport of the pair along alpha to xi_omega, the
    // leader landing exactly on it and the follower parked just behind.
    const int omega = d.omega();
    if (j != omega) {
        bool forward = pos_less(xi_pos(d, j), xi_pos(d, omega));
        int dirP = forward ? 1 : -1;
        int front = (pos_less(leg.st[0].apos, leg.st[1].apos) == forward) ? 1 : 0;
        move_along_alpha(d, loop, leg.st, front, xi_pos(d, omega));
        move_along_alpha(d, loop, leg.st, 1 - front, pushed_pos_by_param(d, omega, -dirP, 1));
    }

    // Phase 3: the component on the intersection rides the exact verticals
    // to the exact basepoint member; the other takes the offset track to
    // the pushed member.
    const Pt omega_site = d.xi(omega).coords;
    int on_line;
    if (leg.st[0].pos == omega_site) {
        on_line = 0;
    } else if (leg.st[1].pos == omega_site) {
        on_line = 1;
    } else {
        // only possible when j == omega and the first leg split: promote
        // the component that owns the site
        on_line = leg.swaps ? (leg.mover_exact ? 1 : 0) : 0;
        move_along_alpha(d, loop, leg.st, on_line, xi_pos(d, omega));
    }
    const int off_line = 1 - on_line;

    const int exact_k = leg.mover_exact ? i : j;
    const int pushed_k = leg.mover_exact ? j : i;
    const Pt pushed_dest = leg.mover_exact ? leg.base[1] : leg.base[0];

    do_move(loop, leg.st, off_line,
            offset_return(d, leg.st[static_cast<std::size_t>(off_line)].pos, omega, pushed_k,
                          pushed_dest));
    do_move(loop, leg.st, on_line, vertical_return(d, omega, exact_k));
    return loop;
}

}  // namespace rtq
