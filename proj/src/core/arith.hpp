#pragma once

/**
 * @file arith.hpp
 * @brief Integer primitives shared by the numeric and the case-split paths,
 *        and the Euclid-style algorithms written once over both.
 */

#include "core/errors.hpp"
#include "core/intpoly.hpp"

namespace qpart {

inline int sign(const BigInt& a) { return sgn(a); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// a mod b in [0, b), floor semantics. Requires b >= 1.
inline BigInt mod_pos(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw DomainError("mod_pos: modulus must be positive, got " + b.get_str());
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InvariantViolation("exact division failed: " + a.get_str() + " / " + b.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class Int>
Int abs_value(const Int& a) {
  return sign(a) < 0 ? Int(-a) : a;
}

/// Nonnegative gcd; gcd(a, 0) = |a|.
template <class Int>
Int gcd_of(const Int& a, const Int& b) {
  Int x = abs_value(a);
  Int y = abs_value(b);
  while (sign(y) != 0) {
    Int r = mod_pos(x, y);
    x = y;
    y = r;
  }
  return x;
}

template <class Int>
struct Bezout2 {
  Int gcd;
  Int s;
  Int t;
};

/// s*a + t*b = gcd(a, b) >= 0. Throws DomainError if both are zero.
template <class Int>
Bezout2<Int> extended_gcd(const Int& a, const Int& b) {
  const int sa = sign(a);
  const int sb = sign(b);
  if (sa == 0 && sb == 0) throw DomainError("gcd of zero and zero is undefined");
  Int r0 = abs_value(a), r1 = abs_value(b);
  Int s0(1), s1(0), t0(0), t1(1);
  while (sign(r1) != 0) {
    Int q = floor_div(r0, r1);
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (sa < 0) s0 = -s0;
  if (sb < 0) t0 = -t0;
  return {r0, s0, t0};
}

/// u in [0, b) with a*u = 1 (mod b); 0 when b = 1.
template <class Int>
Int inverse_mod_of(const Int& a, const Int& b) {
  if (sign(b) <= 0) throw DomainError("inverse modulo a nonpositive modulus");
  if (sign(b - Int(1)) == 0) return Int(0);
  Bezout2<Int> e = extended_gcd(a, b);
  if (sign(e.gcd - Int(1)) != 0) throw DomainError("inverse requested for non-coprime arguments");
  return mod_pos(e.s, b);
}

}  // namespace qpart
