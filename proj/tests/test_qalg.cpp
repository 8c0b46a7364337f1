#include <doctest.h>

#include "rtq/qalg.hpp"

#include <random>

using namespace rtq;

namespace {

LaurentPoly3 q(long c, long eq, long ea = 0, long et = 0) {
    return LaurentPoly3::term(c, eq, ea, et);
}

LaurentPoly3 random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<long> expo(-4, 4);
    std::uniform_int_distribution<long> coef(-9, 9);
    LaurentPoly3 p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        p += q(coef(rng), expo(rng), expo(rng), expo(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("q-Pochhammer values") {
    CHECK(q_pochhammer(0) == LaurentPoly3::one());
    CHECK(q_pochhammer(1) == LaurentPoly3::one() - q(1, 2));
    // (1-q^2)(1-q^4) = 1 - q^2 - q^4 + q^6
    CHECK(q_pochhammer(2) == q(1, 0) - q(1, 2) - q(1, 4) + q(1, 6));
    // leading term sign (-1)^i at degree 2(1+...+i)
    for (int i = 0; i <= 6; ++i) {
        auto p = q_pochhammer(i);
        auto lead = p.terms().rbegin();
        CHECK(lead->first.q == i * (i + 1));
        CHECK(lead->second == ((i % 2) ? -1 : 1));
    }
}

TEST_CASE("t-Pochhammer values and the t = -1 relation") {
    CHECK(t_pochhammer(0) == LaurentPoly3::one());
    CHECK(t_pochhammer(1) == LaurentPoly3::one() + q(1, 2, 0, -1));
    for (int i = 0; i <= 12; ++i) {
        CHECK(t_pochhammer(i).substitute_t_minus1() == q_pochhammer(i));
    }
}

TEST_CASE("inv statistic") {
    CHECK(inv_statistic({1, 1, 2}) == 0);
    CHECK(inv_statistic({2, 1, 1}) == 2);
    CHECK(inv_statistic({2, 1, 2, 1}) == 3);
    CHECK(inv_statistic({}) == 0);
}

TEST_CASE("quantum multinomial examples") {
    CHECK(quantum_multinomial(5, {5}) == LaurentPoly3::one());
    CHECK(quantum_multinomial(2, {1, 1}) == q(1, 0) + q(1, 2));
    CHECK(quantum_multinomial(3, {2, 1}) == q(1, 0) + q(1, 2) + q(1, 4));
    CHECK_THROWS_AS(quantum_multinomial(3, {2, 2}), std::invalid_argument);
}

TEST_CASE("multinomials are polynomials in q^2 with nonnegative coefficients") {
    for (int j = 0; j <= 8; ++j) {
        for (int d1 = 0; d1 <= j; ++d1) {
            for (int d2 = 0; d1 + d2 <= j; ++d2) {
                auto m = quantum_multinomial(j, {d1, d2, j - d1 - d2});
                CHECK(m.is_poly_in_q());
                for (const auto& [e, c] : m.terms()) {
                    CHECK(e.q % 2 == 0);
                    CHECK(c > 0);
                }
            }
        }
    }
}

TEST_CASE("inv-statistic identity for all compositions with <= 4 blocks, j <= 8") {
    for (int j = 0; j <= 8; ++j) {
        std::vector<std::vector<int>> parts;
        for (int a = 0; a <= j; ++a) {
            for (int b = 0; a + b <= j; ++b) {
                for (int c = 0; a + b + c <= j; ++c) {
                    parts.push_back({a, b, c, j - a - b - c});
                }
            }
        }
        for (const auto& p : parts) {
            CHECK(quantum_multinomial(j, p) == multinomial_by_inv_sum(j, p));
        }
    }
}

TEST_CASE("binomial symmetry d <-> j-d") {
    for (int j = 0; j <= 8; ++j) {
        for (int d = 0; d <= j; ++d) {
            CHECK(quantum_multinomial(j, {d, j - d}) == quantum_multinomial(j, {j - d, d}));
        }
    }
}

TEST_CASE("negative binomial is the q -> 1/q rescaling") {
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(quantum_binomial_neg(a, b) == quantum_binomial(a, b).invert_q());
        }
    }
}

TEST_CASE("ring laws on randomized triples") {
    std::mt19937 rng(20240817u);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_poly(rng);
        auto b = random_poly(rng);
        auto c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Pochhammer-ratio identity") {
    LaurentPoly3 x2 = q(-1, 2, 0, -1);  // -t^{-1} q^2
    CHECK(verify_pochhammer_identity(x2, {0}));
    CHECK(verify_pochhammer_identity(x2, {1}));
    CHECK(verify_pochhammer_identity(x2, {2, 1}));
    // displayed consequence at m = 1: both sides equal (-t^{-1}q^2;q^2)_d
    for (int dd = 0; dd <= 4; ++dd) {
        CHECK(verify_pochhammer_identity(x2, {dd}));
    }
    // all d with <= 3 parts and entries <= 3
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int c = 0; c <= 3; ++c) {
                CHECK(verify_pochhammer_identity(x2, {a, b, c}));
            }
        }
    }
    // a generic monomial x^2 = q^4 a^2
    CHECK(verify_pochhammer_identity(q(1, 4, 2, 0), {2, 2}));
}

TEST_CASE("canonical text form") {
    CHECK(LaurentPoly3().to_string() == "0");
    CHECK((q(1, 0) + q(-3, 2, 1, -1)).to_string() == "1 + -3*q^2*a^1*t^-1");
}
