/**
 * @file qalg.hpp
 * @brief q-combinatorics: Pochhammer symbols, quantum binomials and
 *        multinomials, the inv statistic, and the Pochhammer-ratio identity.
 *
 * Conventions (all in the variable q^2):
 *   (q^2;q^2)_i      = prod_{j=1..i} (1 - q^{2j})
 *   (-t^{-1}q^2;q^2)_i = prod_{j=1..i} (1 + t^{-1} q^{2j})
 *   [j; d_1,...,d_m] = (q^2;q^2)_j / prod (q^2;q^2)_{d_i}      (sum d_i = j)
 *   [a; b]_+ = [a; b, a-b],   [a; b]^- = [a; b]_+ with q -> q^{-1}
 *
 * Multinomials are computed by iterated exact division of Pochhammers; in
 * debug builds small cases are cross-checked against the inv-statistic sum
 * sum_{sigma} q^{2 inv(sigma)}, which is the paper-anchored oracle.
 */
#pragma once

#include "rtq/laurent.hpp"

#include <cstdint>
#include <vector>

namespace rtq {

/// (q^2;q^2)_i.
LaurentPoly3 q_pochhammer(int i);

/// (-t^{-1}q^2;q^2)_i. Setting t = -1 termwise recovers q_pochhammer(i).
LaurentPoly3 t_pochhammer(int i);

/// (x^2;q^2)_i = prod_{j=0..i-1} (1 - x^2 q^{2j}) with x^2 given as a
/// (possibly signed) monomial.
LaurentPoly3 x_pochhammer(const LaurentPoly3& x_squared, int i);

/// Quantum multinomial [j; d_1,...,d_m]. Requires sum(parts) == j with all
/// parts nonnegative; throws std::invalid_argument otherwise. The result is
/// a genuine polynomial in q^2 with nonnegative coefficients.
LaurentPoly3 quantum_multinomial(int j, const std::vector<int>& parts);

/// Quantum binomial [a; b]_+.
LaurentPoly3 quantum_binomial(int a, int b);

/// Rescaled quantum binomial [a; b]^- = [a; b]_+ |_{q -> q^{-1}}.
LaurentPoly3 quantum_binomial_neg(int a, int b);

/// Number of inversions of a sequence: pairs (a,b) with a < b, s_a > s_b.
std::int64_t inv_statistic(const std::vector<int>& sequence);

/// Independent oracle for quantum multinomials: enumerate all sequences in
/// S_j^k(parts) and sum q^{2 inv}. Exponential; intended for tests and the
/// debug cross-check only.
LaurentPoly3 multinomial_by_inv_sum(int j, const std::vector<int>& parts);

/// Checks the Pochhammer-ratio identity
///   (x^2;q^2)_{|d|} / prod (q^2;q^2)_{d_i}
///     = sum_{alpha+beta=d} (-x^2 q^{-1})^{|alpha|}
///         q^{sum alpha_i^2 + 2 sum_{i<m} alpha_{i+1} (d_1+...+d_i)}
///         / prod (q^2;q^2)_{alpha_i} (q^2;q^2)_{beta_i}
/// as an exact polynomial identity after clearing denominators by
/// prod (q^2;q^2)_{d_i}, with x^2 instantiated as the given monomial.
bool verify_pochhammer_identity(const LaurentPoly3& x_squared, const std::vector<int>& d);

}  // namespace rtq
