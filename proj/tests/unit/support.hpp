#pragma once

#include "core/intpoly.hpp"
#include "core/quasipoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qpart::testing {

inline PolyZ P(std::vector<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return PolyZ(std::move(v));
}

inline QuasiPoly Q(Period T, long C, std::vector<std::vector<long>> comps) {
  std::vector<PolyZ> ps;
  for (auto& c : comps) ps.push_back(P(c));
  return QuasiPoly(T, BigInt(C), std::move(ps));
}

inline QuasiPoly N(const char* text) { return QuasiPoly::from_poly(parse_poly(text)); }

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt floor_q(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  PolyZ poly(int max_degree, long bound) {
    int deg = static_cast<int>(uniform(0, max_degree));
    std::vector<long> c;
    for (int k = 0; k <= deg; ++k) c.push_back(uniform(-bound, bound));
    return P(c);
  }
  PolyZ nonzero_poly(int max_degree, long bound) {
    for (;;) {
      PolyZ p = poly(max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }
  QuasiPoly quasi(Period max_period, int max_degree, long bound) {
    Period T = static_cast<Period>(uniform(1, static_cast<long>(max_period)));
    std::vector<PolyZ> comps;
    for (Period i = 0; i < T; ++i) comps.push_back(poly(max_degree, bound));
    return QuasiPoly(T, BigInt(uniform(0, 5)), std::move(comps));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpart::testing
