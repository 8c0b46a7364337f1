#include "rtq/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rtq {

Fraction::Fraction(std::int64_t u_, std::int64_t v_) : u(u_), v(v_) {
    if (u < 0 || v <= 0) throw std::invalid_argument("Fraction: need u >= 0, v >= 1");
    if (u == 0 && v != 1) throw std::invalid_argument("Fraction: zero is 0/1");
    if (std::gcd(u, v) != 1) throw std::invalid_argument("Fraction: u/v not reduced");
}

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size()) {
        throw std::invalid_argument("Fraction: expected \"u/v\"");
    }
    auto parse_int = [](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("Fraction: expected nonnegative integers");
        }
        if (s.size() > 9) throw std::invalid_argument("Fraction: value out of range");
        return static_cast<std::int64_t>(std::stoll(s));
    };
    return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Fraction::to_string() const {
    return std::to_string(u) + "/" + std::to_string(v);
}

std::vector<TwistLetter> TwistWord::letters_in_time_order() const {
    std::vector<TwistLetter> out;
    // runs = [a_n, ..., a_1]; a_1 is a T-run and letters alternate leftward.
    TwistLetter letter = TwistLetter::T;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        for (int k = 0; k < *it; ++k) out.push_back(letter);
        letter = (letter == TwistLetter::T) ? TwistLetter::R : TwistLetter::T;
    }
    return out;
}

std::string TwistWord::to_string() const {
    if (runs.empty()) return "";
    std::ostringstream os;
    TwistLetter letter = final_letter;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) os << ' ';
        os << (letter == TwistLetter::T ? 'T' : 'R');
        if (runs[i] > 1) os << '^' << runs[i];
        letter = (letter == TwistLetter::T) ? TwistLetter::R : TwistLetter::T;
    }
    return os.str();
}

bool TangleState::operator==(const TangleState& o) const {
    return orientation == o.orientation && arrangement[0] == o.arrangement[0] &&
           arrangement[1] == o.arrangement[1] && arrangement[2] == o.arrangement[2];
}

std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::UP: return "UP";
        case Orientation::OP: return "OP";
        case Orientation::RI: return "RI";
    }
    return "?";
}

std::string to_string(PunctureRole r) {
    switch (r) {
        case PunctureRole::XMinus: return "X-";
        case PunctureRole::XPlus: return "X+";
        case PunctureRole::Y: return "Y";
    }
    return "?";
}

std::string TangleState::to_string() const {
    std::ostringstream os;
    os << "(" << rtq::to_string(orientation) << ", " << rtq::to_string(arrangement[0]) << "|"
       << rtq::to_string(arrangement[1]) << "|" << rtq::to_string(arrangement[2]) << ")";
    return os.str();
}

TwistWord continued_fraction(const Fraction& f) {
    TwistWord word;
    if (f.is_trivial()) return word;
    // Reverse the recursion T:(u,v)->(u+v,v), R:(u,v)->(u,u+v) down to (0,1),
    // grouping equal letters into runs. Letters come out in reverse time
    // order, which is exactly the [a_n, ..., a_1] storage order.
    std::int64_t u = f.u;
    std::int64_t v = f.v;
    bool first = true;
    while (!(u == 0 && v == 1)) {
        if (u >= v) {
            int run = 0;
            while (u >= v && !(u == 0 && v == 1)) {
                u -= v;
                ++run;
            }
            word.runs.push_back(run);
            if (first) word.final_letter = TwistLetter::T;
        } else {
            int run = 0;
            while (v > u) {
                v -= u;
                ++run;
                if (u == 0) throw std::logic_error("continued_fraction: walk escaped");
            }
            word.runs.push_back(run);
            if (first) word.final_letter = TwistLetter::R;
        }
        first = false;
    }
    return word;
}

Fraction fraction_walk(const TwistWord& word) {
    std::int64_t u = 0;
    std::int64_t v = 1;
    for (TwistLetter l : word.letters_in_time_order()) {
        if (l == TwistLetter::T) {
            u += v;
        } else {
            v += u;
        }
    }
    return Fraction(u, v);
}

TangleState state_step(const TangleState& s, TwistLetter letter) {
    // The six states, indexed for the transition table below.
    static const TangleState kStates[6] = {
        {Orientation::UP, {PunctureRole::Y, PunctureRole::XMinus, PunctureRole::XPlus}},
        {Orientation::UP, {PunctureRole::XMinus, PunctureRole::Y, PunctureRole::XPlus}},
        {Orientation::OP, {PunctureRole::Y, PunctureRole::XPlus, PunctureRole::XMinus}},
        {Orientation::OP, {PunctureRole::XMinus, PunctureRole::XPlus, PunctureRole::Y}},
        {Orientation::RI, {PunctureRole::XPlus, PunctureRole::Y, PunctureRole::XMinus}},
        {Orientation::RI, {PunctureRole::XPlus, PunctureRole::XMinus, PunctureRole::Y}},
    };
    // T-edges and R-edges. T toggles within {UP} and swaps OP <-> RI;
    // R swaps UP <-> OP and toggles within {RI}. Each node has exactly one
    // T-edge and one R-edge; the assignment is pinned by the tangles
    // tau_{3/1} -> state 1, tau_{3/4} -> state 3, tau_{4/3} -> state 0 and
    // by compatibility with the twist-rule orientation transforms
    // (T: UP->UP, OP->RI, RI->OP; R: UP->OP, OP->UP, RI->RI).
    static const int kT[6] = {1, 0, 4, 5, 2, 3};
    static const int kR[6] = {2, 3, 0, 1, 5, 4};

    int idx = -1;
    for (int i = 0; i < 6; ++i) {
        if (kStates[i] == s) {
            idx = i;
            break;
        }
    }
    if (idx < 0) throw std::invalid_argument("state_step: unreachable state");
    return kStates[letter == TwistLetter::T ? kT[idx] : kR[idx]];
}

TangleState state_of(const TwistWord& word) {
    TangleState s;  // trivial-tangle state (UP, Y|X-|X+)
    for (TwistLetter l : word.letters_in_time_order()) s = state_step(s, l);
    return s;
}

}  // namespace rtq
