#pragma once

/**
 * @file denumerant.hpp
 * @brief Restricted partition counts p_A(m) = #{x >= 0 : a . x = m} for two
 *        and three coefficients, numerically and as quasi-polynomials in n.
 */

#include "core/intpoly.hpp"
#include "core/quasipoly.hpp"

#include <span>

namespace qpart {

/// Enumeration over all but the smallest coefficient. Any number of
/// coefficients; m < 0 gives 0. Throws DomainError for a_i <= 0 or when m
/// does not fit in 64 bits.
BigInt count_bruteforce(std::span<const BigInt> a, const BigInt& m);

/// Popoviciu's formula m/(a1 a2) - {a1^-1 m / a2} - {a2^-1 m / a1} + 1.
/// Requires gcd(a1, a2) = 1 and m >= 0.
BigInt popoviciu2(const BigInt& a1, const BigInt& a2, const BigInt& m);

/// Two coefficients, any gcd structure.
BigInt count2(const BigInt& a1, const BigInt& a2, const BigInt& m);

/// Reduction of a three-coefficient problem to sums of two-coefficient
/// counts: with d0 = gcd(a1, a2, a3) and d = gcd(a1', a2') of the reduced
/// coefficients, every solution has x3 = x0 + k*d and
///   p = chi * sum_{k=0}^{floor(m~/a3')} p_{a1~, a2~}(m~ - a3'*k).
struct Reduction3 {
  BigInt d0;
  bool chi = false;  ///< d0 | m; the remaining fields are set only when true.
  BigInt m_prime;
  BigInt a1_prime, a2_prime, a3_prime;
  BigInt d;
  BigInt x0;  ///< least x3 compatible with the residue of m' mod d.
  BigInt m_tilde;
  BigInt a1_tilde, a2_tilde;
};

Reduction3 reduce3(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m);

enum class RoleOrder {
  largest_last,  ///< the largest coefficient takes the a3 role
  as_given,
};

/// Three coefficients by the closed form C - S1/a2 - S2/a1 with both
/// fractional-part sums evaluated along their Euclid chains.
BigInt count3(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m,
              RoleOrder order = RoleOrder::largest_last);

/// Three coefficients by summing popoviciu2 over the reduction's range.
BigInt count3_via_sum(const BigInt& a1, const BigInt& a2, const BigInt& a3, const BigInt& m,
                      RoleOrder order = RoleOrder::largest_last);

/// Two-coefficient count as a quasi-polynomial in n. Requires a1, a2
/// strictly positive.
QuasiPoly count2_symbolic(const QuasiPoly& a1, const QuasiPoly& a2, const QuasiPoly& m);

/// Three-coefficient count as a quasi-polynomial in n. Requires a1, a2, a3
/// strictly positive.
QuasiPoly count3_symbolic(const QuasiPoly& a1, const QuasiPoly& a2, const QuasiPoly& a3,
                          const QuasiPoly& m);

}  // namespace qpart
