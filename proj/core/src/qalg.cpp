#include "rtq/qalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace rtq {

LaurentPoly3 q_pochhammer(int i) {
    if (i < 0) throw std::invalid_argument("q_pochhammer: negative index");
    LaurentPoly3 p = LaurentPoly3::one();
    for (int j = 1; j <= i; ++j) {
        p *= LaurentPoly3::one() - LaurentPoly3::term(1, 2 * j);
    }
    return p;
}

LaurentPoly3 t_pochhammer(int i) {
    if (i < 0) throw std::invalid_argument("t_pochhammer: negative index");
    LaurentPoly3 p = LaurentPoly3::one();
    for (int j = 1; j <= i; ++j) {
        p *= LaurentPoly3::one() + LaurentPoly3::term(1, 2 * j, 0, -1);
    }
    return p;
}

LaurentPoly3 x_pochhammer(const LaurentPoly3& x_squared, int i) {
    if (i < 0) throw std::invalid_argument("x_pochhammer: negative index");
    if (x_squared.term_count() != 1) {
        throw std::invalid_argument("x_pochhammer: x^2 must be a monomial");
    }
    LaurentPoly3 p = LaurentPoly3::one();
    for (int j = 0; j < i; ++j) {
        LaurentPoly3 f = x_squared;
        f.mul_monomial(1, 2 * j);
        p *= LaurentPoly3::one() - f;
    }
    return p;
}

namespace {

void check_parts(int j, const std::vector<int>& parts) {
    long long sum = 0;
    for (int d : parts) {
        if (d < 0) throw std::invalid_argument("quantum_multinomial: negative part");
        sum += d;
    }
    if (sum != j) throw std::invalid_argument("quantum_multinomial: parts do not sum to j");
}

void enumerate_sequences(std::vector<int>& remaining, std::vector<int>& seq, int len,
                         LaurentPoly3& acc) {
    if (static_cast<int>(seq.size()) == len) {
        acc += LaurentPoly3::term(1, 2 * inv_statistic(seq));
        return;
    }
    for (std::size_t v = 0; v < remaining.size(); ++v) {
        if (remaining[v] == 0) continue;
        remaining[v]--;
        seq.push_back(static_cast<int>(v) + 1);
        enumerate_sequences(remaining, seq, len, acc);
        seq.pop_back();
        remaining[v]++;
    }
}

}  // namespace

LaurentPoly3 quantum_multinomial(int j, const std::vector<int>& parts) {
    check_parts(j, parts);
    LaurentPoly3 result = q_pochhammer(j);
    for (int d : parts) {
        if (d == 0 || d == j) continue;
        result = exact_div_q(result, q_pochhammer(d));
    }
#ifndef NDEBUG
    if (j <= 7 && parts.size() <= 4) {
        assert(result == multinomial_by_inv_sum(j, parts));
    }
#endif
    return result;
}

LaurentPoly3 quantum_binomial(int a, int b) {
    if (b < 0 || b > a) return LaurentPoly3();
    return quantum_multinomial(a, {b, a - b});
}

LaurentPoly3 quantum_binomial_neg(int a, int b) {
    return quantum_binomial(a, b).invert_q();
}

std::int64_t inv_statistic(const std::vector<int>& sequence) {
    std::int64_t inv = 0;
    for (std::size_t a = 0; a < sequence.size(); ++a) {
        for (std::size_t b = a + 1; b < sequence.size(); ++b) {
            if (sequence[a] > sequence[b]) ++inv;
        }
    }
    return inv;
}

LaurentPoly3 multinomial_by_inv_sum(int j, const std::vector<int>& parts) {
    check_parts(j, parts);
    LaurentPoly3 acc;
    std::vector<int> remaining = parts;
    std::vector<int> seq;
    enumerate_sequences(remaining, seq, j, acc);
    return acc;
}

bool verify_pochhammer_identity(const LaurentPoly3& x_squared, const std::vector<int>& d) {
    for (int di : d) {
        if (di < 0) throw std::invalid_argument("verify_pochhammer_identity: negative d_i");
    }
    const int m = static_cast<int>(d.size());
    const int total = std::accumulate(d.begin(), d.end(), 0);

    // Both sides multiplied through by prod (q^2;q^2)_{d_i}.
    LaurentPoly3 lhs = x_pochhammer(x_squared, total);

    LaurentPoly3 rhs;
    std::vector<int> alpha(static_cast<std::size_t>(m), 0);
    // Iterate alpha componentwise over 0..d_i.
    while (true) {
        long long asum = 0;
        long long exponent = 0;
        for (int i = 0; i < m; ++i) {
            asum += alpha[static_cast<std::size_t>(i)];
            exponent += static_cast<long long>(alpha[static_cast<std::size_t>(i)]) *
                        alpha[static_cast<std::size_t>(i)];
        }
        long long prefix = 0;
        for (int i = 0; i + 1 < m; ++i) {
            prefix += d[static_cast<std::size_t>(i)];
            exponent += 2 * static_cast<long long>(alpha[static_cast<std::size_t>(i) + 1]) * prefix;
        }

        // (-x^2 q^{-1})^{asum} as a monomial.
        LaurentPoly3 factor = LaurentPoly3::one();
        for (long long k = 0; k < asum; ++k) {
            LaurentPoly3 f = x_squared;
            f.mul_monomial(-1, -1);
            factor *= f;
        }
        factor.mul_monomial(1, exponent);
        for (int i = 0; i < m; ++i) {
            factor *= quantum_binomial(d[static_cast<std::size_t>(i)], alpha[static_cast<std::size_t>(i)]);
        }
        rhs += factor;

        int pos = 0;
        while (pos < m && alpha[static_cast<std::size_t>(pos)] == d[static_cast<std::size_t>(pos)]) {
            alpha[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == m) break;
        ++alpha[static_cast<std::size_t>(pos)];
    }

    return lhs == rhs;
}

}  // namespace rtq
