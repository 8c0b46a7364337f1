#include "rtq/arc_diagram.hpp"

#include "conventions.hpp"
#include "rtq/loops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rtq {

namespace {

boost::multiprecision::cpp_int floor_int(const Rat& r) {
    boost::multiprecision::cpp_int num = numerator(r);
    boost::multiprecision::cpp_int den = denominator(r);
    boost::multiprecision::cpp_int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

Rat mod1(const Rat& r) { return r - Rat(floor_int(r)); }

// Stand-in plane coordinate of a crossing on one of the four boundary
// edges. Fold coordinates run in (0,1/2); the corner dictionary is
// (0,0) -> +1, (1/2,0) -> -1, (0,1/2) -> +2, (1/2,1/2) -> infinity, so the
// edges land on [1,2], (-2,-1), (-1,1) and (2,3) respectively.
Rat edge_position(bool x_grid, const Rat& xm, const Rat& ym) {
    if (x_grid) {
        Rat c = ym <= Rat(1, 2) ? ym : Rat(1) - ym;
        if (xm == 0) return Rat(1) + 2 * c;
        return Rat(-1) - 2 * c;
    }
    Rat c = xm <= Rat(1, 2) ? xm : Rat(1) - xm;
    if (ym == 0) return Rat(1) - 4 * c;
    return Rat(2) + 2 * c;
}

Rat puncture_position(const Rat& xm, const Rat& ym) {
    if (ym == 0) return xm == 0 ? Rat(1) : Rat(-1);
    if (xm == 0) return Rat(2);
    throw ConstructionFailure("arc endpoint landed on the puncture at infinity");
}

struct Arch {
    Rat from;
    Rat to;
    bool upper;
    Rat height;
};

// Arc polyline in the u >= v frame (punctures -1, 1, 2), construction order.
Polyline build_geo(int big_u, int small_v, const TwistWord& word) {
    // Affine walk upstairs: T(x,y) = (x+y+1/2, y), R(x,y) = (x, x+y+1/2).
    // The arc is the straight segment between the images of the two
    // ramification points (0,0) and (0,1/2).
    Pt p0{Rat(0), Rat(0)};
    Pt p1{Rat(0), Rat(1, 2)};
    for (TwistLetter l : word.letters_in_time_order()) {
        auto apply = [&](Pt& p) {
            if (l == TwistLetter::T) {
                p = Pt{p.x + p.y + Rat(1, 2), p.y};
            } else {
                p = Pt{p.x, p.x + p.y + Rat(1, 2)};
            }
        };
        apply(p0);
        apply(p1);
    }
    if (p1.x - p0.x != Rat(big_u, 2) || p1.y - p0.y != Rat(small_v, 2)) {
        throw ConstructionFailure("geodesic displacement mismatch");
    }

    struct Event {
        Rat s;
        Rat plane_x;
    };
    std::vector<Event> events;
    auto position = [&](const Rat& s) {
        return Pt{p0.x + s * Rat(big_u, 2), p0.y + s * Rat(small_v, 2)};
    };
    auto push_events = [&](bool x_grid, const Rat& origin, int span) {
        Rat two_origin = 2 * origin;
        boost::multiprecision::cpp_int base = floor_int(two_origin);
        for (int k = 1; k < span; ++k) {
            Rat s = (Rat(base) + k - two_origin) / span;
            if (!(s > 0 && s < 1)) throw ConstructionFailure("grid event out of range");
            Pt at = position(s);
            events.push_back(Event{s, edge_position(x_grid, mod1(at.x), mod1(at.y))});
        }
    };
    push_events(true, p0.x, big_u);
    push_events(false, p0.y, small_v);
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.s < b.s; });
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        if (events[i].s == events[i + 1].s) throw ConstructionFailure("coincident grid events");
    }

    std::vector<Rat> nodes;
    nodes.push_back(puncture_position(mod1(p0.x), mod1(p0.y)));
    for (const auto& e : events) nodes.push_back(e.plane_x);
    nodes.push_back(puncture_position(mod1(p1.x), mod1(p1.y)));

    std::vector<bool> upper;
    for (std::size_t g = 0; g + 1 < nodes.size(); ++g) {
        Rat s_lo = (g == 0) ? Rat(0) : events[g - 1].s;
        Rat s_hi = (g == nodes.size() - 2) ? Rat(1) : events[g].s;
        Pt mid = position((s_lo + s_hi) / 2);
        bool left = mod1(mid.x) < Rat(1, 2);
        bool low = mod1(mid.y) < Rat(1, 2);
        upper.push_back((left == low) == conv::kUpperCellsDiagonal);
    }
    for (std::size_t g = 0; g + 1 < upper.size(); ++g) {
        if (upper[g] == upper[g + 1]) throw ConstructionFailure("faces fail to alternate");
    }

    // Arch drawing. delta keeps the sloped shoulders clear of every node.
    std::set<Rat> xs(nodes.begin(), nodes.end());
    Rat min_gap(1);
    for (auto it = xs.begin(); std::next(it) != xs.end(); ++it) {
        Rat gap = *std::next(it) - *it;
        if (gap < min_gap) min_gap = gap;
    }
    Rat delta = min_gap / 4;

    std::vector<Arch> arches;
    for (std::size_t g = 0; g + 1 < nodes.size(); ++g) {
        arches.push_back(Arch{nodes[g], nodes[g + 1], upper[g], Rat(0)});
    }
    // Heights by width rank per half-plane: containment implies strictly
    // smaller width, so nested arches stay strictly below their parents.
    for (bool side : {false, true}) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < arches.size(); ++i) {
            if (arches[i].upper == side) idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            Rat wa = abs(arches[a].to - arches[a].from);
            Rat wb = abs(arches[b].to - arches[b].from);
            if (wa != wb) return wa < wb;
            return std::min(arches[a].from, arches[a].to) < std::min(arches[b].from, arches[b].to);
        });
        for (std::size_t r = 0; r < idx.size(); ++r) {
            arches[idx[r]].height = Rat(static_cast<long>(r) + 1);
        }
    }

    Polyline alpha;
    alpha.push_back(Pt{nodes.front(), Rat(0)});
    for (const auto& arch : arches) {
        Rat h = (arch.upper ? Rat(1) : Rat(-1)) * arch.height;
        Rat inward = arch.from < arch.to ? delta : -delta;
        alpha.push_back(Pt{arch.from + inward, h});
        alpha.push_back(Pt{arch.to - inward, h});
        alpha.push_back(Pt{arch.to, Rat(0)});
    }
    return alpha;
}

// Minimal-crossing placement: midpoint of the leftmost subinterval of
// (lo,hi) on which the crossing count attains its minimum.
Rat scan_vertical(const Polyline& alpha, const Rat& lo, const Rat& hi, int want) {
    std::set<Rat> cuts;
    for (const auto& p : alpha) {
        if (lo < p.x && p.x < hi) cuts.insert(p.x);
    }
    std::vector<Rat> candidates;
    Rat prev = lo;
    for (const auto& c : cuts) {
        candidates.push_back((prev + c) / 2);
        prev = c;
    }
    candidates.push_back((prev + hi) / 2);

    Rat best;
    int best_count = -1;
    for (const auto& c : candidates) {
        int count = line_crossings(alpha, c);
        if (best_count < 0 || count < best_count) {
            best_count = count;
            best = c;
        }
    }
    if (best_count != want) {
        throw ConstructionFailure("vertical crossing count " + std::to_string(best_count) +
                                  " != expected " + std::to_string(want));
    }
    return best;
}

bool has_vertex_at(const Polyline& alpha, const Rat& x) {
    for (const auto& p : alpha) {
        if (p.x == x) return true;
    }
    return false;
}

}  // namespace

ArcDiagram ArcDiagram::build(const Fraction& f) {
    ArcDiagram d;
    d.f_ = f;
    TwistWord word = continued_fraction(f);
    d.state_ = state_of(word);
    d.n_ = static_cast<int>(f.u + f.v);

    const bool mirrored = f.u < f.v;
    Polyline alpha;

    if (f.is_trivial()) {
        // tau_{0/1}: one inactive intersection, no active ones.
        alpha = {Pt{Rat(-1), Rat(0)}, Pt{Rat(-3, 4), Rat(1)}, Pt{Rat(3, 4), Rat(1)},
                 Pt{Rat(1), Rat(0)}};
        d.punctures_ = {Pt{Rat(-2), Rat(0)}, Pt{Rat(-1), Rat(0)}, Pt{Rat(1), Rat(0)}};
        d.x_active_ = Rat(-3, 2);
        d.x_inactive_ = Rat(0);
    } else {
        const int big = static_cast<int>(std::max(f.u, f.v));
        const int small = static_cast<int>(std::min(f.u, f.v));
        TwistWord geo_word = mirrored ? continued_fraction(Fraction(f.v, f.u)) : word;
        alpha = build_geo(big, small, geo_word);

        // Main vertical: x = 0 when that is non-degenerate and minimal,
        // otherwise the scanned minimum of (-1,1).
        Rat x_main(0);
        if (has_vertex_at(alpha, x_main) || line_crossings(alpha, x_main) != big) {
            x_main = scan_vertical(alpha, Rat(-1), Rat(1), big);
        }
        Rat x_scan = scan_vertical(alpha, Rat(1), Rat(2), small);

        if (mirrored) {
            for (auto& p : alpha) p.x = -p.x;
            d.punctures_ = {Pt{Rat(-2), Rat(0)}, Pt{Rat(-1), Rat(0)}, Pt{Rat(1), Rat(0)}};
            d.x_active_ = -x_scan;
            d.x_inactive_ = -x_main;
        } else {
            d.punctures_ = {Pt{Rat(-1), Rat(0)}, Pt{Rat(1), Rat(0)}, Pt{Rat(2), Rat(0)}};
            d.x_active_ = x_main;
            d.x_inactive_ = x_scan;
        }
    }

    d.roles_ = {d.state_.arrangement[0], d.state_.arrangement[1], d.state_.arrangement[2]};

    if (!polyline_is_simple(alpha)) throw ConstructionFailure("arc is not simple");

    // Orient alpha from X- to X+; the endpoint set must match the state
    // machine's X+- placement exactly.
    Pt xminus = d.puncture(PunctureRole::XMinus);
    Pt xplus = d.puncture(PunctureRole::XPlus);
    if (alpha.front() == xplus && alpha.back() == xminus) {
        std::reverse(alpha.begin(), alpha.end());
    }
    if (!(alpha.front() == xminus && alpha.back() == xplus)) {
        throw ConstructionFailure("arc endpoints disagree with the state machine");
    }
    d.alpha_ = std::move(alpha);

    auto hits_a = vertical_hits(d.alpha_, d.x_active_);
    auto hits_i = vertical_hits(d.alpha_, d.x_inactive_);
    if (static_cast<int>(hits_a.size()) != d.u() || static_cast<int>(hits_i.size()) != d.v()) {
        throw ConstructionFailure("intersection counts disagree with u and v");
    }
    struct Raw {
        bool active;
        VerticalHit hit;
    };
    std::vector<Raw> raw;
    for (const auto& h : hits_a) raw.push_back({true, h});
    for (const auto& h : hits_i) raw.push_back({false, h});

    std::vector<std::size_t> order(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (raw[a].active != raw[b].active) return raw[a].active;
        return raw[a].hit.y < raw[b].hit.y;
    });
    d.xi_.resize(raw.size());
    int rank_a = 0;
    int rank_i = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const Raw& r = raw[order[pos]];
        IntersectionPoint p;
        p.active = r.active;
        p.height_rank = r.active ? ++rank_a : ++rank_i;
        p.standard_index = r.active ? rank_a : d.u() + rank_i;
        p.coords = Pt{r.active ? d.x_active_ : d.x_inactive_, r.hit.y};
        p.seg = r.hit.seg;
        p.s = r.hit.s;
        d.xi_[static_cast<std::size_t>(p.standard_index) - 1] = p;
    }

    std::vector<int> by_arc(d.xi_.size());
    for (std::size_t i = 0; i < by_arc.size(); ++i) by_arc[i] = static_cast<int>(i) + 1;
    std::sort(by_arc.begin(), by_arc.end(), [&](int a, int b) {
        const auto& pa = d.xi_[static_cast<std::size_t>(a) - 1];
        const auto& pb = d.xi_[static_cast<std::size_t>(b) - 1];
        if (pa.seg != pb.seg) return pa.seg < pb.seg;
        return pa.s < pb.s;
    });
    for (std::size_t r = 0; r < by_arc.size(); ++r) {
        d.xi_[static_cast<std::size_t>(by_arc[r]) - 1].arc_rank = static_cast<int>(r) + 1;
    }
    d.omega_ = by_arc.back();

    Rat max_h(0);
    for (const auto& p : d.alpha_) {
        Rat h = abs(p.y);
        if (h > max_h) max_h = h;
    }
    d.slide_height_ = max_h + 1;

    std::set<Rat> xs;
    for (const auto& p : d.alpha_) xs.insert(p.x);
    for (const auto& p : d.punctures_) xs.insert(p.x);
    xs.insert(d.x_active_);
    xs.insert(d.x_inactive_);
    Rat min_gap(1);
    for (auto it = xs.begin(); std::next(it) != xs.end(); ++it) {
        Rat gap = *std::next(it) - *it;
        if (gap < min_gap) min_gap = gap;
    }
    d.push_scale_ = min_gap / (16 * (d.n_ + 2));

    return d;
}

Pt ArcDiagram::puncture(PunctureRole role) const {
    for (int i = 0; i < 3; ++i) {
        if (roles_[static_cast<std::size_t>(i)] == role) {
            return punctures_[static_cast<std::size_t>(i)];
        }
    }
    throw ConstructionFailure("role not present");
}

const IntersectionPoint& ArcDiagram::xi(int standard_index) const {
    if (standard_index < 1 || standard_index > n_) {
        throw std::out_of_range("xi: bad standard index");
    }
    return xi_[static_cast<std::size_t>(standard_index) - 1];
}

std::vector<int> ArcDiagram::arc_order() const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (const auto& p : xi_) order[static_cast<std::size_t>(p.arc_rank) - 1] = p.standard_index;
    return order;
}

BlockPartition ArcDiagram::partition_xyz() const {
    BlockPartition bp;
    std::vector<int> order = arc_order();
    std::vector<bool> matched(static_cast<std::size_t>(n_) + 1, false);
    Pt y_p = puncture(PunctureRole::Y);
    Pt xm_p = puncture(PunctureRole::XMinus);
    Pt xp_p = puncture(PunctureRole::XPlus);

    for (std::size_t r = 0; r + 1 < order.size(); ++r) {
        int a = order[r];
        int b = order[r + 1];
        if (matched[static_cast<std::size_t>(a)] || matched[static_cast<std::size_t>(b)]) continue;
        if (xi(a).active != xi(b).active) continue;
        PlanarLoop cap = loop_gamma_pair(*this, a, b);
        if (abs_winding(cap, y_p) == 1 && abs_winding(cap, xm_p) == 0 &&
            abs_winding(cap, xp_p) == 0) {
            bp.pairs.emplace_back(a, b);
            matched[static_cast<std::size_t>(a)] = true;
            matched[static_cast<std::size_t>(b)] = true;
        }
    }
    for (int i = 1; i <= n_; ++i) {
        if (!matched[static_cast<std::size_t>(i)]) bp.z_indices.push_back(i);
    }
    return bp;
}

namespace {
double approx(const Rat& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}
}  // namespace

std::string ArcDiagram::emit_svg() const {
    std::ostringstream os;
    double hmax = approx(slide_height_) + 1.0;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-3 " << -hmax << " 7 " << 2 * hmax
       << "\" width=\"700\" height=\"" << 100 * hmax << "\">\n";
    os << "<g transform=\"scale(1,-1)\" stroke-width=\"0.02\" font-size=\"0.18\">\n";
    auto line = [&](double x0, double y0, double x1, double y1, const char* color) {
        os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
           << "\" stroke=\"" << color << "\"/>\n";
    };
    line(approx(x_active_), -hmax, approx(x_active_), hmax, "#999999");
    line(approx(x_inactive_), -hmax, approx(x_inactive_), hmax, "#bbbbbb");
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" points=\"";
    for (const auto& p : alpha_) os << approx(p.x) << ',' << approx(p.y) << ' ';
    os << "\"/>\n";
    for (int i = 0; i < 3; ++i) {
        const auto& p = punctures_[static_cast<std::size_t>(i)];
        os << "<circle cx=\"" << approx(p.x) << "\" cy=\"0\" r=\"0.05\" fill=\"#c03030\"/>\n";
        os << "<text x=\"" << approx(p.x) + 0.06 << "\" y=\"0.25\" transform=\"scale(1,-1)\">"
           << to_string(roles_[static_cast<std::size_t>(i)]) << "</text>\n";
    }
    for (const auto& p : xi_) {
        os << "<circle cx=\"" << approx(p.coords.x) << "\" cy=\"" << approx(p.coords.y)
           << "\" r=\"0.035\" fill=\"#207020\"/>\n";
        os << "<text x=\"" << approx(p.coords.x) + 0.05 << "\" y=\"" << -approx(p.coords.y) - 0.05
           << "\" transform=\"scale(1,-1)\">x" << p.standard_index << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string ArcDiagram::dump_json() const {
    std::ostringstream os;
    auto rat = [&](const Rat& r) {
        std::ostringstream t;
        t << '"' << numerator(r) << '/' << denominator(r) << '"';
        return t.str();
    };
    os << "{\"tangle\":\"" << f_.to_string() << "\",\"state\":\"" << state_.to_string() << "\",";
    os << "\"punctures\":[";
    for (int i = 0; i < 3; ++i) {
        if (i) os << ',';
        os << "{\"x\":" << rat(punctures_[static_cast<std::size_t>(i)].x) << ",\"role\":\""
           << to_string(roles_[static_cast<std::size_t>(i)]) << "\"}";
    }
    os << "],\"x_active\":" << rat(x_active_) << ",\"x_inactive\":" << rat(x_inactive_);
    os << ",\"arc\":[";
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (i) os << ',';
        os << '[' << rat(alpha_[i].x) << ',' << rat(alpha_[i].y) << ']';
    }
    os << "],\"xi\":[";
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        const auto& p = xi_[i];
        if (i) os << ',';
        os << "{\"index\":" << p.standard_index << ",\"active\":" << (p.active ? "true" : "false")
           << ",\"arc_rank\":" << p.arc_rank << ",\"x\":" << rat(p.coords.x)
           << ",\"y\":" << rat(p.coords.y) << '}';
    }
    os << "]}";
    return os.str();
}

}  // namespace rtq
