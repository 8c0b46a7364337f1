#include <doctest.h>

#include "rtq/arc_diagram.hpp"
#include "rtq/loops.hpp"

#include <numeric>
#include <set>

using namespace rtq;

namespace {

std::vector<Fraction> sweep(int max_total) {
    std::vector<Fraction> out;
    for (int total = 2; total <= max_total; ++total) {
        for (int u = 1; u < total; ++u) {
            if (std::gcd(u, total - u) == 1) out.emplace_back(u, total - u);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("trivial tangle diagram") {
    ArcDiagram d = ArcDiagram::build(Fraction(0, 1));
    CHECK(d.u() == 0);
    CHECK(d.v() == 1);
    CHECK(d.total() == 1);
    CHECK(d.xi(1).active == false);
    CHECK(d.arc_order() == std::vector<int>{1});
    CHECK(d.omega() == 1);
    CHECK(d.punctures()[0].x == Rat(-2));
    CHECK(d.punctures()[2].x == Rat(1));
}

TEST_CASE("puncture positions by regime") {
    ArcDiagram d31 = ArcDiagram::build(Fraction(3, 1));
    CHECK(d31.punctures()[0].x == Rat(-1));
    CHECK(d31.punctures()[1].x == Rat(1));
    CHECK(d31.punctures()[2].x == Rat(2));
    // roles of tau_{3/1}: (UP, X-|Y|X+)
    CHECK(d31.roles()[0] == PunctureRole::XMinus);
    CHECK(d31.roles()[1] == PunctureRole::Y);
    CHECK(d31.roles()[2] == PunctureRole::XPlus);
    CHECK(d31.u() == 3);
    CHECK(d31.v() == 1);

    ArcDiagram d34 = ArcDiagram::build(Fraction(3, 4));
    CHECK(d34.punctures()[0].x == Rat(-2));
    CHECK(d34.punctures()[1].x == Rat(-1));
    CHECK(d34.punctures()[2].x == Rat(1));
}

TEST_CASE("intersection counts and simplicity over the sweep") {
    for (const Fraction& f : sweep(14)) {
        ArcDiagram d = ArcDiagram::build(f);
        CHECK(d.total() == d.u() + d.v());
        int active = 0;
        std::set<int> ranks;
        for (const auto& p : d.xis()) {
            if (p.active) ++active;
            ranks.insert(p.arc_rank);
        }
        CHECK(active == d.u());
        CHECK(static_cast<int>(ranks.size()) == d.total());
        CHECK(polyline_is_simple(d.alpha()));
        // endpoints are exactly the X+- punctures
        CHECK(d.alpha().front() == d.puncture(PunctureRole::XMinus));
        CHECK(d.alpha().back() == d.puncture(PunctureRole::XPlus));
    }
}

TEST_CASE("worked examples have the right counts") {
    ArcDiagram d52 = ArcDiagram::build(Fraction(5, 2));
    CHECK(d52.u() == 5);
    CHECK(d52.v() == 2);
    for (int k = 1; k <= 5; ++k) CHECK(d52.xi(k).active);
    for (int k = 6; k <= 7; ++k) CHECK_FALSE(d52.xi(k).active);

    ArcDiagram d103 = ArcDiagram::build(Fraction(10, 3));
    CHECK(d103.u() == 10);
    CHECK(d103.v() == 3);

    ArcDiagram d43 = ArcDiagram::build(Fraction(4, 3));
    CHECK(d43.u() == 4);
    CHECK(d43.v() == 3);
    CHECK(d43.punctures()[0].x == Rat(-1));
}

TEST_CASE("mirror rule: tau_{v/u} is tau_{u/v} reflected") {
    for (int u = 2; u <= 9; ++u) {
        for (int v = 1; v < u; ++v) {
            if (std::gcd(u, v) != 1) continue;
            ArcDiagram big = ArcDiagram::build(Fraction(u, v));
            ArcDiagram small = ArcDiagram::build(Fraction(v, u));
            std::set<std::pair<Rat, Rat>> a;
            std::set<std::pair<Rat, Rat>> b;
            for (const auto& p : big.alpha()) a.insert({-p.x, p.y});
            for (const auto& p : small.alpha()) b.insert({p.x, p.y});
            CHECK(a == b);
        }
    }
}

TEST_CASE("twist count check along the word (intermediate diagrams)") {
    Fraction target(10, 3);
    TwistWord word = continued_fraction(target);
    auto letters = word.letters_in_time_order();
    std::int64_t u = 0;
    std::int64_t v = 1;
    for (TwistLetter l : letters) {
        if (l == TwistLetter::T) {
            u += v;
        } else {
            v += u;
        }
        ArcDiagram d = ArcDiagram::build(Fraction(u, v));
        CHECK(d.u() == u);
        CHECK(d.v() == v);
    }
}

TEST_CASE("partition pairs for torus tangles") {
    for (int n = 1; n <= 12; ++n) {
        ArcDiagram d = ArcDiagram::build(Fraction(n, 1));
        BlockPartition bp = d.partition_xyz();
        CHECK(static_cast<int>(bp.pairs.size()) == n / 2);
        std::set<int> used;
        for (auto [a, b] : bp.pairs) {
            CHECK(d.xi(a).active == d.xi(b).active);
            CHECK(used.insert(a).second);
            CHECK(used.insert(b).second);
        }
        CHECK(bp.pairs.size() * 2 + bp.z_indices.size() == static_cast<std::size_t>(d.total()));
    }
    // tau_{8/1}: Z is the single inactive point
    {
        ArcDiagram d = ArcDiagram::build(Fraction(8, 1));
        BlockPartition bp = d.partition_xyz();
        REQUIRE(bp.z_indices.size() == 1);
        CHECK_FALSE(d.xi(bp.z_indices[0]).active);
    }
    // tau_{7/1}: Z is one active and one inactive point
    {
        ArcDiagram d = ArcDiagram::build(Fraction(7, 1));
        BlockPartition bp = d.partition_xyz();
        REQUIRE(bp.z_indices.size() == 2);
        int active = 0;
        for (int z : bp.z_indices) active += d.xi(z).active ? 1 : 0;
        CHECK(active == 1);
    }
    // tau_{10/3}: five pairs among the actives, Z = the three inactives
    {
        ArcDiagram d = ArcDiagram::build(Fraction(10, 3));
        BlockPartition bp = d.partition_xyz();
        CHECK(bp.pairs.size() == 5);
        REQUIRE(bp.z_indices.size() == 3);
        for (int z : bp.z_indices) CHECK_FALSE(d.xi(z).active);
    }
}

TEST_CASE("svg and json emitters") {
    ArcDiagram d = ArcDiagram::build(Fraction(5, 2));
    std::string svg = d.emit_svg();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    // 7 intersection labels
    for (int k = 1; k <= 7; ++k) {
        CHECK(svg.find(">x" + std::to_string(k) + "<") != std::string::npos);
    }
    std::string js = d.dump_json();
    CHECK(js.find("\"tangle\":\"5/2\"") != std::string::npos);

    ArcDiagram t = ArcDiagram::build(Fraction(0, 1));
    CHECK(t.emit_svg().find(">x1<") != std::string::npos);
}
