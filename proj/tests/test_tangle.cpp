#include <doctest.h>

#include "rtq/tangle.hpp"

#include <numeric>

using namespace rtq;

namespace {

TangleState make(Orientation o, PunctureRole a, PunctureRole b, PunctureRole c) {
    TangleState s;
    s.orientation = o;
    s.arrangement[0] = a;
    s.arrangement[1] = b;
    s.arrangement[2] = c;
    return s;
}

const auto XM = PunctureRole::XMinus;
const auto XP = PunctureRole::XPlus;
const auto Y = PunctureRole::Y;

}  // namespace

TEST_CASE("fraction parsing and validation") {
    CHECK(Fraction::parse("10/3") == Fraction(10, 3));
    CHECK(Fraction::parse("0/1").is_trivial());
    CHECK_THROWS_AS(Fraction::parse("4/2"), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::parse("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(Fraction::parse("3"), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(0, 2), std::invalid_argument);
}

TEST_CASE("continued fraction examples") {
    CHECK(continued_fraction(Fraction(0, 1)).empty());

    TwistWord w43 = continued_fraction(Fraction(4, 3));
    CHECK(w43.runs == std::vector<int>{1, 2, 1});
    CHECK(w43.final_letter == TwistLetter::T);
    CHECK(w43.to_string() == "T R^2 T");

    TwistWord w103 = continued_fraction(Fraction(10, 3));
    CHECK(w103.runs == std::vector<int>{3, 2, 1});
    CHECK(w103.final_letter == TwistLetter::T);

    TwistWord w34 = continued_fraction(Fraction(3, 4));
    CHECK(w34.runs == std::vector<int>{1, 3});
    CHECK(w34.final_letter == TwistLetter::R);
    CHECK(w34.to_string() == "R T^3");
}

TEST_CASE("fraction walk examples") {
    CHECK(fraction_walk(TwistWord{}) == Fraction(0, 1));
    CHECK(fraction_walk(TwistWord{{3}, TwistLetter::T}) == Fraction(3, 1));
    CHECK(fraction_walk(TwistWord{{1, 2, 1}, TwistLetter::T}) == Fraction(4, 3));
}

TEST_CASE("round trip over all coprime u+v <= 200") {
    for (int total = 2; total <= 200; ++total) {
        for (int u = 1; u < total; ++u) {
            int v = total - u;
            if (std::gcd(u, v) != 1) continue;
            Fraction f(u, v);
            TwistWord w = continued_fraction(f);
            CHECK(fraction_walk(w) == f);
            // parity: odd run count iff u >= v
            CHECK((w.runs.size() % 2 == 1) == (u >= v));
            CHECK((w.final_letter == TwistLetter::T) == (u >= v));
        }
    }
}

TEST_CASE("state machine pinned examples") {
    CHECK(state_of(TwistWord{}) == make(Orientation::UP, Y, XM, XP));
    CHECK(state_of(continued_fraction(Fraction(3, 1))) == make(Orientation::UP, XM, Y, XP));
    CHECK(state_of(continued_fraction(Fraction(3, 4))) == make(Orientation::OP, XM, XP, Y));
    CHECK(state_of(continued_fraction(Fraction(4, 3))) == make(Orientation::UP, Y, XM, XP));
    CHECK(state_of(continued_fraction(Fraction(10, 3))) == make(Orientation::UP, Y, XM, XP));
}

TEST_CASE("torus tangle states by parity") {
    for (int n = 1; n <= 12; ++n) {
        TangleState s = state_of(continued_fraction(Fraction(n, 1)));
        if (n % 2 == 0) {
            CHECK(s == make(Orientation::UP, Y, XM, XP));
        } else {
            CHECK(s == make(Orientation::UP, XM, Y, XP));
        }
    }
}

TEST_CASE("word serialization round trip parity") {
    TwistWord w = continued_fraction(Fraction(5, 2));
    CHECK(w.to_string() == "T^2 R T");
    auto letters = w.letters_in_time_order();
    REQUIRE(letters.size() == 4);
    CHECK(letters.front() == TwistLetter::T);
    CHECK(letters.back() == TwistLetter::T);
}
