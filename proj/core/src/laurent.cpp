#include "rtq/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rtq {

namespace {
constexpr std::int64_t kExpLimit = std::int64_t(1) << 40;

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r = x + y;
    if (r > kExpLimit || r < -kExpLimit) {
        throw std::overflow_error("LaurentPoly3 exponent overflow");
    }
    return r;
}
}  // namespace

Exp3 Exp3::operator+(const Exp3& o) const {
    return Exp3{checked_add(q, o.q), checked_add(a, o.a), checked_add(t, o.t)};
}

Exp3 Exp3::operator-(const Exp3& o) const {
    return Exp3{checked_add(q, -o.q), checked_add(a, -o.a), checked_add(t, -o.t)};
}

LaurentPoly3::LaurentPoly3(long c) {
    if (c != 0) terms_[Exp3{}] = c;
}

LaurentPoly3::LaurentPoly3(const BigInt& c) {
    if (c != 0) terms_[Exp3{}] = c;
}

LaurentPoly3 LaurentPoly3::term(const BigInt& c, std::int64_t eq, std::int64_t ea, std::int64_t et) {
    LaurentPoly3 p;
    if (c != 0) p.terms_[Exp3{eq, ea, et}] = c;
    return p;
}

bool LaurentPoly3::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp3{} && terms_.begin()->second == 1;
}

BigInt LaurentPoly3::coeff(std::int64_t eq, std::int64_t ea, std::int64_t et) const {
    auto it = terms_.find(Exp3{eq, ea, et});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly3::add_term(const Exp3& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly3& LaurentPoly3::operator-=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly3 LaurentPoly3::operator+(const LaurentPoly3& o) const {
    LaurentPoly3 r = *this;
    r += o;
    return r;
}

LaurentPoly3 LaurentPoly3::operator-(const LaurentPoly3& o) const {
    LaurentPoly3 r = *this;
    r -= o;
    return r;
}

LaurentPoly3 LaurentPoly3::operator-() const {
    LaurentPoly3 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly3 LaurentPoly3::operator*(const LaurentPoly3& o) const {
    LaurentPoly3 r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

LaurentPoly3& LaurentPoly3::operator*=(const LaurentPoly3& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly3::mul_monomial(const BigInt& c, std::int64_t eq, std::int64_t ea, std::int64_t et) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    TermMap out;
    const Exp3 shift{eq, ea, et};
    for (const auto& [e, coef] : terms_) out.emplace(e + shift, coef * c);
    terms_ = std::move(out);
}

LaurentPoly3 LaurentPoly3::substitute_t_minus1() const {
    LaurentPoly3 r;
    for (const auto& [e, c] : terms_) {
        BigInt cc = (e.t % 2 != 0) ? BigInt(-c) : c;
        r.add_term(Exp3{e.q, e.a, 0}, cc);
    }
    return r;
}

LaurentPoly3 LaurentPoly3::invert_q() const {
    LaurentPoly3 r;
    for (const auto& [e, c] : terms_) r.add_term(Exp3{-e.q, e.a, e.t}, c);
    return r;
}

bool LaurentPoly3::is_q_only() const {
    for (const auto& [e, c] : terms_) {
        if (e.a != 0 || e.t != 0) return false;
    }
    return true;
}

bool LaurentPoly3::is_poly_in_q() const {
    for (const auto& [e, c] : terms_) {
        if (e.a != 0 || e.t != 0 || e.q < 0) return false;
    }
    return true;
}

std::string LaurentPoly3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e.q != 0) os << "*q^" << e.q;
        if (e.a != 0) os << "*a^" << e.a;
        if (e.t != 0) os << "*t^" << e.t;
    }
    return os.str();
}

LaurentPoly3 exact_div_q(const LaurentPoly3& num, const LaurentPoly3& den) {
    if (!num.is_q_only() || !den.is_q_only() || den.is_zero()) {
        throw std::invalid_argument("exact_div_q: arguments must be nonzero polynomials in q");
    }
    if (num.is_zero()) return LaurentPoly3();

    // Dense long division on q-exponents, shifted to start at zero.
    auto lo_hi = [](const LaurentPoly3& p) {
        return std::pair<std::int64_t, std::int64_t>{p.terms().begin()->first.q,
                                                     p.terms().rbegin()->first.q};
    };
    auto [nlo, nhi] = lo_hi(num);
    auto [dlo, dhi] = lo_hi(den);
    std::vector<BigInt> n(static_cast<std::size_t>(nhi - nlo + 1));
    std::vector<BigInt> d(static_cast<std::size_t>(dhi - dlo + 1));
    for (const auto& [e, c] : num.terms()) n[static_cast<std::size_t>(e.q - nlo)] = c;
    for (const auto& [e, c] : den.terms()) d[static_cast<std::size_t>(e.q - dlo)] = c;

    if (n.size() < d.size()) throw std::domain_error("exact_div_q: not divisible");
    std::vector<BigInt> qout(n.size() - d.size() + 1);
    const BigInt& lead = d.back();
    for (std::size_t i = qout.size(); i-- > 0;) {
        BigInt top = n[i + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("exact_div_q: not divisible");
        BigInt f = top / lead;
        qout[i] = f;
        for (std::size_t k = 0; k < d.size(); ++k) n[i + k] -= f * d[k];
    }
    for (const auto& rem : n) {
        if (rem != 0) throw std::domain_error("exact_div_q: nonzero remainder");
    }
    LaurentPoly3 result;
    for (std::size_t i = 0; i < qout.size(); ++i) {
        if (qout[i] != 0) result.terms_[Exp3{static_cast<std::int64_t>(i) + nlo - dlo, 0, 0}] = qout[i];
    }
    return result;
}

}  // namespace rtq
