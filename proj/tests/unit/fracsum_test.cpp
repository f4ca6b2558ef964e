#include "core/arith.hpp"
#include "core/errors.hpp"
#include "core/fracsum.hpp"
#include "support.hpp"

#include <cmath>

#include <gtest/gtest.h>

using namespace qpart;
using qpart::testing::N;
using qpart::testing::Q;

namespace {

FracSumInstance inst(long r1, long r2, long r3, long r4, long r5) {
  return {BigInt(r1), BigInt(r2), BigInt(r3), BigInt(r4), BigInt(r5)};
}

BigRat ratio(const BigInt& a, const BigInt& b) {
  BigRat r(a, b);
  r.canonicalize();
  return r;
}

FracSumInstance random_instance(qpart::testing::Rng& rng) {
  long r1 = rng.uniform(-200, 200);
  return inst(r1, r1 + rng.uniform(-1, 1000), rng.uniform(-1000, 1000), rng.uniform(-1000, 1000),
              rng.uniform(1, 500));
}

}  // namespace

TEST(ModPos, FloorSemantics) {
  EXPECT_EQ(mod_pos(BigInt(7), BigInt(5)), 2);
  EXPECT_EQ(mod_pos(BigInt(-3), BigInt(5)), 2);
  EXPECT_EQ(mod_pos(BigInt(0), BigInt(9)), 0);
  EXPECT_THROW(mod_pos(BigInt(1), BigInt(0)), DomainError);
  EXPECT_THROW(mod_pos(BigInt(1), BigInt(-4)), DomainError);
}

TEST(FracSum, BruteForce) {
  EXPECT_EQ(sum_bruteforce(inst(0, 4, 0, 1, 5)), 10);
  EXPECT_EQ(sum_bruteforce(inst(1, 3, 2, 7, 5)), 8);
  EXPECT_EQ(sum_bruteforce(inst(5, 4, 1, 1, 3)), 0);
  EXPECT_THROW(sum_bruteforce(inst(0, 1, 0, 1, 0)), DomainError);
  EXPECT_THROW(sum_fast(inst(0, 1, 0, 1, -3)), DomainError);
}

TEST(FracSum, Lemma) {
  auto a = lemma_step(inst(0, 100, 1, 3, 9));
  ASSERT_EQ(a.status, LemmaStatus::ok);
  EXPECT_EQ(a.value, sum_bruteforce(inst(0, 100, 1, 3, 9)));
  auto b = lemma_step(inst(0, 100, 3, 3, 9));
  ASSERT_EQ(b.status, LemmaStatus::ok);
  EXPECT_EQ(b.value, sum_bruteforce(inst(0, 100, 3, 3, 9)));
  EXPECT_EQ(lemma_step(inst(0, 10, 1, 9, 9)).status, LemmaStatus::degenerate_modulus);
  EXPECT_EQ(lemma_step(inst(0, 0, 4, 3, 9)).status, LemmaStatus::narrow_window);
  EXPECT_EQ(sum_fast(inst(0, 0, 4, 3, 9)), 4);
}

TEST(FracSum, OracleRandom) {
  qpart::testing::Rng rng(201);
  int lemma_checked = 0;
  for (int t = 0; t < 2000; ++t) {
    FracSumInstance s = random_instance(rng);
    BigInt brute = sum_bruteforce(s);
    ASSERT_EQ(sum_fast(s), brute);
    auto l = lemma_step(s);
    if (l.status == LemmaStatus::ok) {
      ASSERT_EQ(l.value, brute);
      ++lemma_checked;
    }
  }
  EXPECT_GT(lemma_checked, 1000);
}

TEST(FracSum, LemmaWithFallbacks) {
  EXPECT_EQ(sum_lemma(inst(0, 10, 1, 9, 9)), 11);
  EXPECT_EQ(sum_lemma(inst(0, 0, 4, 3, 9)), 4);
  EXPECT_EQ(sum_lemma(inst(3, 2, 4, 3, 9)), 0);
  qpart::testing::Rng rng(202);
  for (int t = 0; t < 3000; ++t) {
    // Short windows and small moduli hit every branch.
    BigInt r1 = rng.uniform(-20, 20);
    FracSumInstance s{r1, r1 + rng.uniform(-1, 12), rng.uniform(-30, 30), rng.uniform(-30, 30),
                      rng.uniform(1, 15)};
    ASSERT_EQ(sum_lemma(s), sum_bruteforce(s));
  }
}

TEST(FracSum, ReciprocityExample) {
  ReciprocityStep step = reciprocity_step(inst(1, 3, 2, 7, 5));
  EXPECT_EQ(step.next.r5, 2);
  EXPECT_EQ(step.next.r4, 5);
  EXPECT_EQ(step.next.r3, -2);
  BigRat lhs = BigRat(sum_bruteforce(inst(1, 3, 2, 7, 5))) +
               ratio(5, 2) * BigRat(sum_oriented(step.next));
  EXPECT_EQ(lhs, step.a);
}

TEST(FracSum, ReciprocityRandom) {
  qpart::testing::Rng rng(203);
  int checked = 0;
  while (checked < 1000) {
    FracSumInstance s = random_instance(rng);
    if (mod_pos(s.r4, s.r5) == 0) continue;
    ReciprocityStep step = reciprocity_step(s);
    BigInt g = mod_pos(s.r4, s.r5);
    BigRat lhs = BigRat(sum_bruteforce(s)) + ratio(s.r5, g) * BigRat(sum_oriented(step.next));
    ASSERT_EQ(lhs, step.a);
    ++checked;
  }
}

TEST(FracSum, ReciprocitySingleTerm) {
  // r1 = r2 gives an inverted next window and the oriented sum is -S(it, i0).
  FracSumInstance s = inst(4, 4, 3, 7, 11);
  ReciprocityStep step = reciprocity_step(s);
  EXPECT_GT(step.next.r1, step.next.r2);
  EXPECT_EQ(BigRat(sum_bruteforce(s)) + ratio(11, 7) * BigRat(sum_oriented(step.next)), step.a);
  EXPECT_THROW(reciprocity_step(inst(0, 3, 1, 10, 5)), DomainError);
}

TEST(FracSum, DegenerateModulus) {
  EXPECT_EQ(sum_fast(inst(-3, 7, 4, 15, 5)), BigInt(11) * 4);
  EuclidChain c = euclid_chain(inst(-3, 7, 4, 15, 5));
  EXPECT_EQ(c.end, ChainEnd::divisible_modulus);
  EXPECT_EQ(c.steps(), 0u);
}

TEST(FracSum, ChainRecordsLevels) {
  FracSumInstance s = inst(0, 100000, 17, 1234567, 7654321);
  EuclidChain c = euclid_chain(s);
  EXPECT_EQ(c.value, sum_bruteforce(s));
  EXPECT_EQ(c.value, sum_fast(s));
  ASSERT_FALSE(c.levels.empty());
  EXPECT_EQ(c.levels.front().instance.r5, s.r5);
  for (std::size_t k = 1; k < c.levels.size(); ++k)
    EXPECT_EQ(c.levels[k].instance.r5, c.levels[k - 1].g);
}

TEST(FracSum, ShiftPeriodicity) {
  qpart::testing::Rng rng(207);
  for (int t = 0; t < 200; ++t) {
    FracSumInstance s = random_instance(rng);
    FracSumInstance shifted = s;
    shifted.r3 += s.r4 * s.r5;
    EXPECT_EQ(sum_fast(shifted), sum_fast(s));
  }
}

TEST(FracSum, LargeAdditivityAndChainLength) {
  qpart::testing::Rng rng(209);
  for (int t = 0; t < 50; ++t) {
    BigInt r5 = BigInt(1000000000000L) + rng.uniform(0, 1000000000L);
    BigInt r4 = BigInt(rng.uniform(1, 1L << 40)) * 997 + rng.uniform(0, 1000);
    BigInt r3 = BigInt(rng.uniform(-1000000000000L, 1000000000000L));
    BigInt r1 = rng.uniform(-1000000, 1000000);
    BigInt r2 = r1 + 1000000000L + rng.uniform(0, 1000000);
    BigInt mid = r1 + rng.uniform(0, 1000000000L);
    FracSumInstance whole{r1, r2, r3, r4, r5};
    FracSumInstance left{r1, mid, r3, r4, r5};
    FracSumInstance right{mid + 1, r2, r3, r4, r5};
    EXPECT_EQ(sum_fast(whole), sum_fast(left) + sum_fast(right));
    EuclidChain c = euclid_chain(whole);
    EXPECT_LE(static_cast<double>(c.steps()), 2 * std::log2(r5.get_d()) + 2);
  }
}

TEST(FracSumSymbolic, ConstantsEmbed) {
  qpart::testing::Rng rng(211);
  for (int t = 0; t < 50; ++t) {
    FracSumInstance s = random_instance(rng);
    QuasiPoly q = sum_fast_symbolic(QuasiPoly::constant(s.r1), QuasiPoly::constant(s.r2),
                                    QuasiPoly::constant(s.r3), QuasiPoly::constant(s.r4),
                                    QuasiPoly::constant(s.r5));
    EXPECT_EQ(q(q.lower_boundary() + 1), sum_bruteforce(s));
    EXPECT_EQ(q.period(), 1u);
  }
}

TEST(FracSumSymbolic, ParityCount) {
  QuasiPoly q = sum_fast_symbolic(QuasiPoly(), N("n"), QuasiPoly(), QuasiPoly::constant(1),
                                  QuasiPoly::constant(2));
  EXPECT_EQ(q.period(), 2u);
  for (BigInt n = q.lower_boundary() + 1; n <= 200; ++n) EXPECT_EQ(q(n), (n + 1) / 2);
}

TEST(FracSumSymbolic, UnitModulusIsZero) {
  QuasiPoly q = sum_fast_symbolic(QuasiPoly(), N("n^2"), N("n"), N("3*n+1"), QuasiPoly::constant(1));
  EXPECT_TRUE(q.is_zero());
}

TEST(FracSumSymbolic, PolynomialArguments) {
  std::vector<std::array<const char*, 5>> cases{
      {"0", "n", "1", "n+1", "2*n+3"},
      {"1", "n^2", "n", "2*n+1", "3*n+2"},
      {"0", "3*n", "-n", "n^2+1", "2*n+1"},
      {"2", "5*n+1", "7", "3", "n+4"},
  };
  for (auto& c : cases) {
    QuasiPoly r[5];
    for (int k = 0; k < 5; ++k) r[k] = N(c[k]);
    QuasiPoly q = sum_fast_symbolic(r[0], r[1], r[2], r[3], r[4]);
    for (BigInt n = q.lower_boundary() + 1; n <= q.lower_boundary() + 200; ++n) {
      FracSumInstance s{r[0](n), r[1](n), r[2](n), r[3](n), r[4](n)};
      ASSERT_EQ(q(n), sum_fast(s)) << c[1] << " n=" << n;
    }
  }
  EXPECT_THROW(sum_fast_symbolic(QuasiPoly(), N("n"), QuasiPoly(), N("n"), N("1-n")), DomainError);
}
