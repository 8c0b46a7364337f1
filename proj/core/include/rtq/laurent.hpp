/**
 * @file laurent.hpp
 * @brief Exact integer-coefficient Laurent polynomials in q, a, t.
 *
 * LaurentPoly3 is the universal value type of the engine: every grading
 * monomial q^x a^y t^z, every quantum binomial/multinomial and every
 * Poincare polynomial coefficient lives here. Coefficients are
 * arbitrary-precision integers; exponents are 64-bit with overflow
 * assertions. No floating point anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace rtq {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent triple (q, a, t), ordered lexicographically. The lex order is
/// the canonical term order used for serialization and fixtures.
struct Exp3 {
    std::int64_t q = 0;
    std::int64_t a = 0;
    std::int64_t t = 0;

    friend auto operator<=>(const Exp3&, const Exp3&) = default;
    Exp3 operator+(const Exp3& o) const;
    Exp3 operator-(const Exp3& o) const;
};

class LaurentPoly3 {
public:
    using TermMap = std::map<Exp3, BigInt>;

    LaurentPoly3() = default;
    /// Constant polynomial.
    explicit LaurentPoly3(long c);
    explicit LaurentPoly3(const BigInt& c);
    /// Single term c * q^eq * a^ea * t^et.
    static LaurentPoly3 term(const BigInt& c, std::int64_t eq, std::int64_t ea = 0, std::int64_t et = 0);
    static LaurentPoly3 one() { return LaurentPoly3(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^eq a^ea t^et (zero if absent).
    BigInt coeff(std::int64_t eq, std::int64_t ea = 0, std::int64_t et = 0) const;

    LaurentPoly3& operator+=(const LaurentPoly3& o);
    LaurentPoly3& operator-=(const LaurentPoly3& o);
    LaurentPoly3 operator+(const LaurentPoly3& o) const;
    LaurentPoly3 operator-(const LaurentPoly3& o) const;
    LaurentPoly3 operator-() const;
    LaurentPoly3 operator*(const LaurentPoly3& o) const;
    LaurentPoly3& operator*=(const LaurentPoly3& o);
    bool operator==(const LaurentPoly3& o) const { return terms_ == o.terms_; }

    /// Multiply by the monomial c * q^eq a^ea t^et in place.
    void mul_monomial(const BigInt& c, std::int64_t eq, std::int64_t ea = 0, std::int64_t et = 0);

    /// Substitute t = -1 exactly; the result has all t-exponents zero.
    LaurentPoly3 substitute_t_minus1() const;
    /// Substitute q -> q^{-1} (negate all q-exponents).
    LaurentPoly3 invert_q() const;

    /// True when every term has ea == 0 and et == 0.
    bool is_q_only() const;
    /// True when no q-exponent is negative and ea == et == 0 for all terms.
    bool is_poly_in_q() const;

    /// Canonical text form: "c*q^i*a^j*t^k" terms joined by " + " in lex
    /// order of (eq, ea, et); zero prints "0". Unit exponents keep the ^1
    /// so the form stays trivially parseable and diff-stable.
    std::string to_string() const;

private:
    void add_term(const Exp3& e, const BigInt& c);
    TermMap terms_;

    friend LaurentPoly3 exact_div_q(const LaurentPoly3& num, const LaurentPoly3& den);
};

/// Exact division of polynomials that live in q alone (ea == et == 0
/// everywhere). Asserts divisibility; used for quantum multinomials.
LaurentPoly3 exact_div_q(const LaurentPoly3& num, const LaurentPoly3& den);

}  // namespace rtq
