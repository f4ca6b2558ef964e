#pragma once

/**
 * @file fracsum.hpp
 * @brief Fractional-part sums S(r1, r2, r3; r4, r5) = sum_{x=r1}^{r2} ((r3 + r4*x) mod r5).
 *
 * Four evaluators of increasing sophistication:
 *   - sum_bruteforce: one term at a time, O(r2 - r1).
 *   - lemma_step: the block decomposition by quotient value, O(number of blocks).
 *   - reciprocity_step: trades the sum modulo r5 for a sum modulo r4 mod r5.
 *   - sum_fast: the reciprocity step iterated along the Euclid chain of
 *     (r4, r5), O(log r5) steps of big-integer arithmetic.
 * sum_fast_symbolic runs the sum_fast chain with quasi-polynomial arguments.
 */

#include "core/intpoly.hpp"
#include "core/quasipoly.hpp"

#include <cstddef>
#include <vector>

namespace qpart {

struct FracSumInstance {
  BigInt r1, r2, r3, r4, r5;
};

/// Direct summation; an empty range (r1 > r2) sums to 0. Requires r5 >= 1.
BigInt sum_bruteforce(const FracSumInstance& s);

/// Direct summation under the oriented convention
/// sum_{x=a}^{b} = -sum_{x=b+1}^{a-1} when b < a - 1.
BigInt sum_oriented(const FracSumInstance& s);

enum class LemmaStatus {
  ok,
  degenerate_modulus,  ///< r5 | r4: every term equals r3 mod r5.
  narrow_window,       ///< the range stays inside one quotient block.
};

struct LemmaOutcome {
  LemmaStatus status;
  BigInt value;
};

/// Block decomposition of the sum: groups x by floor((r3 + g*x) / r5) with
/// g = r4 mod r5, sums each block in closed form, and corrects for the
/// block boundaries that land exactly on integers.
LemmaOutcome lemma_step(const FracSumInstance& s);

/// lemma_step where its preconditions hold; a narrow window is summed over
/// its at most two blocks directly, and a degenerate modulus gives
/// (r2 - r1 + 1) * (r3 mod r5). Requires r5 >= 1.
BigInt sum_lemma(const FracSumInstance& s);

struct ReciprocityStep {
  /// S(s) + (r5 / g) * S(next) == a, with g = r4 mod r5.
  BigRat a;
  FracSumInstance next;
};

/// One reciprocity step. `next` = (i0 + 2, it - 1, -r3; r5, g) where
/// i0, it are the quotients at r1, r2. When it - i0 < 2 the next range is
/// inverted and the identity holds with S(next) read by sum_oriented.
/// Throws DomainError when g == 0 or r5 < 1.
ReciprocityStep reciprocity_step(const FracSumInstance& s);

enum class ChainEnd {
  empty_window,       ///< r1 > r2 at the last level.
  divisible_modulus,  ///< the modulus divides the multiplier.
  narrow_window,      ///< at most two quotient blocks, summed directly.
};

struct ChainLevel {
  FracSumInstance instance;
  BigInt g;          ///< multiplier mod modulus at this level.
  BigInt q;          ///< exact-hit correction count (0 at the last level).
  BigInt twice_g_a;  ///< 2*g*A, where A is this level's reciprocity constant.
};

struct EuclidChain {
  std::vector<ChainLevel> levels;  ///< levels[0] is the input instance.
  ChainEnd end = ChainEnd::empty_window;
  BigInt tail;   ///< value of the sum at the last level.
  BigInt value;  ///< value of the sum at level 0.

  /// Number of reciprocity steps taken.
  std::size_t steps() const { return levels.empty() ? 0 : levels.size() - 1; }
};

/// Builds the full chain and evaluates it. Requires r5 >= 1.
EuclidChain euclid_chain(const FracSumInstance& s);

/// The sum by the Euclid chain. Requires r5 >= 1.
BigInt sum_fast(const FracSumInstance& s);

/// The chain evaluated with quasi-polynomial arguments; requires r5 strictly
/// positive. The result agrees with sum_fast at every n above its boundary.
QuasiPoly sum_fast_symbolic(const QuasiPoly& r1, const QuasiPoly& r2, const QuasiPoly& r3,
                            const QuasiPoly& r4, const QuasiPoly& r5);

}  // namespace qpart
