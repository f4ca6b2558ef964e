#pragma once

// Generic form of the Euclid-chain evaluation, instantiated for BigInt
// (numeric) and SymInt (per residue class of quasi-polynomial arguments).

#include "core/arith.hpp"

#include <vector>

namespace qpart::detail {

/// S(lo, hi, shift; mult, modulus).
template <class Int>
struct SumArgs {
  Int lo, hi, shift, mult, modulus;
};

/// sum_{x=lo}^{hi} (shift + g*x), for lo <= hi + 1.
template <class Int>
Int linear_sum(const Int& lo, const Int& hi, const Int& shift, const Int& g) {
  Int count = hi - lo + Int(1);
  return count * shift + exact_div(g * (hi + lo) * count, Int(2));
}

/// The sum when the range spans at most two quotient blocks: it - i0 in {0, 1}.
template <class Int>
Int narrow_sum(const SumArgs<Int>& s, const Int& g, const Int& i0, const Int& it) {
  // First x whose quotient reaches i0 + 1: ceil(((i0+1)*modulus - shift) / g).
  Int first_up = -floor_div(s.shift - (i0 + Int(1)) * s.modulus, g);
  Int quotients = (s.hi - s.lo + Int(1)) * i0 + (it - i0) * (s.hi - first_up + Int(1));
  return linear_sum(s.lo, s.hi, s.shift, g) - s.modulus * quotients;
}

template <class Int>
struct Reciprocity {
  Int lo2, hi2;    ///< window of the reciprocal sum
  Int q;           ///< hits: i in [i0+1, it] with g | i*modulus - shift
  Int twice_g_a;   ///< 2*g times the reciprocity constant
};

/// S(s) + (modulus/g) * S(lo2, hi2, -shift; modulus, g) = twice_g_a / (2g).
template <class Int>
Reciprocity<Int> reciprocity(const SumArgs<Int>& s, const Int& g, const Int& i0, const Int& it) {
  const Int& m = s.modulus;
  const Int& c = s.shift;
  Int lo2 = i0 + Int(2);
  Int hi2 = it - Int(1);

  Int q(0);
  Int d = gcd_of(m, g);
  if (sign(mod_pos(c, d)) == 0) {
    Int g_red = exact_div(g, d);
    Int m_red = exact_div(m, d);
    Int c_red = exact_div(c, d);
    Int inv = inverse_mod_of(m_red, g_red);
    Int r = mod_pos((c_red - (lo2 - Int(1)) * m_red) * inv, g_red);
    q = floor_div(hi2 - lo2 + Int(2) - r, g_red) + Int(1);
  }

  Int count = s.hi - s.lo + Int(1);
  Int count2 = hi2 - lo2 + Int(1);
  Int first_block = floor_div((lo2 - Int(1)) * m - c, g);
  Int last_block = floor_div((hi2 + Int(1)) * m - c, g);
  Int integral = -first_block + (lo2 - Int(2)) * (Int(1) - s.lo) + q - last_block +
                 (hi2 + Int(1)) * s.hi;
  Int twice_g_a = Int(2) * g * count * c + g * g * (s.hi + s.lo) * count -
                  Int(2) * g * m * integral - Int(2) * m * c * count2 +
                  m * m * (hi2 + lo2) * count2;
  return {lo2, hi2, q, twice_g_a};
}

template <class Int>
struct ChainRecord {
  SumArgs<Int> args;
  Int g;
  Int q;
  Int twice_g_a;
};

enum class ChainStop { empty_window, divisible_modulus, narrow_window };

template <class Int>
struct ChainResult {
  Int value;
  Int tail;
  ChainStop stop;
};

/// Walks the Euclid chain of (mult, modulus), then folds back
/// S_{k-1} = (2g*A_{k-1} - 2*modulus*S_k) / (2g) with every division exact.
/// When `trace` is given, one record per level is appended (the last one
/// with q = twice_g_a = 0).
template <class Int>
ChainResult<Int> sum_chain(SumArgs<Int> s, std::vector<ChainRecord<Int>>* trace = nullptr) {
  if (sign(s.modulus) <= 0) throw DomainError("fractional-part sum needs a positive modulus");
  std::vector<ChainRecord<Int>> steps;
  Int tail(0);
  ChainStop stop;
  for (;;) {
    if (sign(s.hi - s.lo) < 0) {
      stop = ChainStop::empty_window;
      if (trace) trace->push_back({s, Int(0), Int(0), Int(0)});
      break;
    }
    Int g = mod_pos(s.mult, s.modulus);
    if (sign(g) == 0) {
      tail = (s.hi - s.lo + Int(1)) * mod_pos(s.shift, s.modulus);
      stop = ChainStop::divisible_modulus;
      if (trace) trace->push_back({s, g, Int(0), Int(0)});
      break;
    }
    Int i0 = floor_div(s.shift + g * s.lo, s.modulus);
    Int it = floor_div(s.shift + g * s.hi, s.modulus);
    if (sign(it - i0 - Int(2)) < 0) {
      tail = narrow_sum(s, g, i0, it);
      stop = ChainStop::narrow_window;
      if (trace) trace->push_back({s, g, Int(0), Int(0)});
      break;
    }
    Reciprocity<Int> rec = reciprocity(s, g, i0, it);
    steps.push_back({s, g, rec.q, rec.twice_g_a});
    if (trace) trace->push_back(steps.back());
    s = SumArgs<Int>{rec.lo2, rec.hi2, -s.shift, s.modulus, g};
  }
  Int value = tail;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    value = exact_div(it->twice_g_a - Int(2) * it->args.modulus * value, Int(2) * it->g);
  return {value, tail, stop};
}

}  // namespace qpart::detail
