/**
 * @file tangle.hpp
 * @brief Rational-tangle bookkeeping: continued fractions, twist words,
 *        and the orientation/puncture state machine.
 *
 * A rational tangle tau_{u/v} is built from the trivial tangle tau_{0/1} by
 * top twists T: (u,v) -> (u+v,v) and right twists R: (u,v) -> (u,u+v). The
 * first twist is always T; the final letter is T exactly when u/v >= 1.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rtq {

/// Reduced fraction u/v with gcd(u,v) = 1; u = 0 only for the trivial
/// tangle 0/1.
struct Fraction {
    std::int64_t u = 0;
    std::int64_t v = 1;

    Fraction() = default;
    Fraction(std::int64_t u_, std::int64_t v_);
    /// Parses "u/v". Throws std::invalid_argument on malformed or
    /// non-coprime input.
    static Fraction parse(const std::string& text);

    bool is_trivial() const { return u == 0; }
    bool operator==(const Fraction&) const = default;
    std::string to_string() const;
};

enum class TwistLetter : std::uint8_t { T, R };

/// Twist word T^{a_n} R^{a_{n-1}} ... T^{a_1} recorded as runs
/// [a_n, ..., a_1]; reading right to left the letters alternate starting
/// with T. The rightmost run is applied first.
struct TwistWord {
    std::vector<int> runs;          ///< [a_n, ..., a_1]
    TwistLetter final_letter = TwistLetter::T;  ///< letter of a_n

    bool empty() const { return runs.empty(); }
    /// Letters in application order (a_1 T's first).
    std::vector<TwistLetter> letters_in_time_order() const;
    /// e.g. "T^3 R^2 T".
    std::string to_string() const;
};

enum class Orientation : std::uint8_t { UP, OP, RI };

enum class PunctureRole : std::uint8_t { XMinus, XPlus, Y };

/// Orientation plus the left-to-right arrangement of the three punctures.
struct TangleState {
    Orientation orientation = Orientation::UP;
    PunctureRole arrangement[3] = {PunctureRole::Y, PunctureRole::XMinus, PunctureRole::XPlus};

    bool operator==(const TangleState& o) const;
    /// e.g. "(UP, Y|X-|X+)".
    std::string to_string() const;
    /// True when the middle puncture carries the role X+ (equivalently the
    /// tangle has OP orientation).
    bool middle_is_xplus() const { return arrangement[1] == PunctureRole::XPlus; }
};

std::string to_string(Orientation o);
std::string to_string(PunctureRole r);

/// Continued-fraction expansion: the unique twist word w with
/// fraction_walk(w) == f. The empty word corresponds to 0/1.
TwistWord continued_fraction(const Fraction& f);

/// Applies the T/R recursion from (0,1) through the word.
Fraction fraction_walk(const TwistWord& word);

/// Walks the six-node transition graph from the trivial-tangle state.
TangleState state_of(const TwistWord& word);

/// One step of the state transition graph.
TangleState state_step(const TangleState& s, TwistLetter letter);

}  // namespace rtq
