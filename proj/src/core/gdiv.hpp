#pragma once

/**
 * @file gdiv.hpp
 * @brief Generalized Euclidean division, divisibility and gcd in the ring of
 *        integer-valued quasi-polynomials.
 *
 * For f, g in Z[x] with g != 0 there is a unique pair P, r of
 * quasi-polynomials with f = P*g + r and 0 <= r < |g| eventually; above the
 * returned lower boundary, P(n) and r(n) are the integer quotient and the
 * remainder in [0, |g(n)|).
 */

#include "core/quasipoly.hpp"

#include <vector>

namespace qpart {

struct DivResult {
  QuasiPoly quotient;
  QuasiPoly remainder;
};

/// Division of integer polynomials. Throws DomainError for g == 0 or when
/// the quotient's period would exceed period_cap().
DivResult gdiv_poly(const PolyZ& f, const PolyZ& g);

/// Division in R: both operands are refined to a common period and divided
/// per residue class. Where a component of g is the zero polynomial the
/// quotient component is 0 and the remainder component is f's.
DivResult gdiv_R(const QuasiPoly& f, const QuasiPoly& g);

/// g | f in R. Throws DomainError if some component of g is zero.
bool divides(const QuasiPoly& g, const QuasiPoly& f);

/// Nonnegative greatest common divisor. Zero entries are ignored; throws
/// DomainError if every entry is zero.
QuasiPoly ggcd(const std::vector<QuasiPoly>& fs);

struct BezoutResult {
  QuasiPoly gcd;
  std::vector<QuasiPoly> coefficients;
};

/// gcd together with u_1..u_s such that sum f_k * u_k == gcd.
BezoutResult bezout(const std::vector<QuasiPoly>& fs);

/// u with a*u == 1 modulo b, normalized into [0, |b|). Returns 0 when b is
/// the constant 1. Throws DomainError when ggcd(a, b) != 1.
QuasiPoly inverse_mod(const QuasiPoly& a, const QuasiPoly& b);

}  // namespace qpart
