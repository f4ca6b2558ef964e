#include "core/denumerant.hpp"
#include "core/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qpart;
using qpart::testing::N;

namespace {

BigInt brute(std::vector<long> a, long m) {
  std::vector<BigInt> v(a.begin(), a.end());
  return count_bruteforce(v, m);
}

}  // namespace

TEST(Denumerant, BruteForce) {
  EXPECT_EQ(brute({1, 1}, 5), 6);
  EXPECT_EQ(brute({2, 3, 5}, 10), 4);
  EXPECT_EQ(brute({3, 5}, 7), 0);
  EXPECT_EQ(brute({3, 5}, -1), 0);
  EXPECT_THROW(brute({0, 5}, 7), DomainError);
}

TEST(Denumerant, Popoviciu) {
  EXPECT_EQ(popoviciu2(3, 5, 8), 1);
  EXPECT_EQ(popoviciu2(3, 5, 7), 0);
  for (long m = 0; m <= 20; ++m) EXPECT_EQ(popoviciu2(1, 1, m), m + 1);
  EXPECT_THROW(popoviciu2(2, 4, 8), DomainError);
  EXPECT_THROW(popoviciu2(2, 3, -1), DomainError);
}

TEST(Denumerant, Count2) {
  EXPECT_EQ(count2(2, 4, 7), 0);
  EXPECT_EQ(count2(2, 4, 8), 3);
  EXPECT_EQ(count2(3, 5, 100), 7);
  EXPECT_EQ(count2(3, 5, -4), 0);
}

TEST(Denumerant, Count2Random) {
  qpart::testing::Rng rng(301);
  for (int t = 0; t < 500; ++t) {
    long a1 = rng.uniform(1, 60), a2 = rng.uniform(1, 60), m = rng.uniform(0, 3000);
    ASSERT_EQ(count2(a1, a2, m), brute({a1, a2}, m)) << a1 << " " << a2 << " " << m;
  }
}

TEST(Denumerant, Reduce3) {
  for (long m : {9, 10}) {
    Reduction3 r = reduce3(2, 4, 7, m);
    EXPECT_EQ(r.d0, 1);
    EXPECT_EQ(r.d, 2);
    EXPECT_EQ(r.a3_prime, 7);
    EXPECT_EQ(r.x0, m % 2);
  }
  Reduction3 r = reduce3(6, 10, 15, 31);
  EXPECT_EQ(r.d0, 1);
  EXPECT_EQ(r.d, 2);
  EXPECT_EQ(r.a1_tilde, 3);
  EXPECT_EQ(r.a2_tilde, 5);
  Reduction3 z = reduce3(2, 2, 2, 5);
  EXPECT_EQ(z.d0, 2);
  EXPECT_FALSE(z.chi);
  EXPECT_EQ(count3(2, 2, 2, 5), 0);
}

TEST(Denumerant, Count3) {
  EXPECT_EQ(count3(2, 3, 5, 10), 4);
  EXPECT_EQ(count3_via_sum(2, 3, 5, 10), 4);
  for (long m = 0; m <= 40; ++m) EXPECT_EQ(count3(1, 1, 1, m), (m + 1) * (m + 2) / 2);
  EXPECT_EQ(count3(3, 5, 7, 100), brute({3, 5, 7}, 100));
  EXPECT_EQ(count3(3, 5, 7, -5), 0);
  EXPECT_EQ(count3_via_sum(4, 6, 9, 1), 0);
}

TEST(Denumerant, Count3RandomAllPaths) {
  qpart::testing::Rng rng(303);
  for (int t = 0; t < 400; ++t) {
    long a1 = rng.uniform(1, 40), a2 = rng.uniform(1, 40), a3 = rng.uniform(1, 40);
    if (rng.uniform(0, 3) == 0) {
      long k = rng.uniform(2, 4);
      a1 *= k, a2 *= k, a3 *= k;
    }
    long m = rng.uniform(0, 2000);
    BigInt expect = brute({a1, a2, a3}, m);
    ASSERT_EQ(count3(a1, a2, a3, m), expect) << a1 << " " << a2 << " " << a3 << " " << m;
    ASSERT_EQ(count3(a1, a2, a3, m, RoleOrder::as_given), expect);
    ASSERT_EQ(count3_via_sum(a1, a2, a3, m), expect);
    ASSERT_EQ(count3_via_sum(a1, a2, a3, m, RoleOrder::as_given), expect);
  }
}

TEST(Denumerant, ChiGateExhaustive) {
  for (long a1 = 1; a1 <= 6; ++a1)
    for (long a2 = 1; a2 <= 6; ++a2)
      for (long a3 = 1; a3 <= 6; ++a3)
        for (long m = 0; m <= 30; ++m) {
          BigInt expect = brute({a1, a2, a3}, m);
          ASSERT_EQ(count3(a1, a2, a3, m), expect);
        }
}

TEST(Denumerant, ScalingInvariance) {
  qpart::testing::Rng rng(305);
  for (int t = 0; t < 100; ++t) {
    long a1 = rng.uniform(1, 30), a2 = rng.uniform(1, 30), a3 = rng.uniform(1, 30);
    long m = rng.uniform(0, 1000), k = rng.uniform(1, 7);
    EXPECT_EQ(count3(k * a1, k * a2, k * a3, k * m), count3(a1, a2, a3, m));
    EXPECT_EQ(count2(k * a1, k * a2, k * m), count2(a1, a2, m));
  }
}

TEST(Denumerant, MonotoneAlongResidues) {
  const long a1 = 4, a2 = 6, a3 = 9, L = 36;
  for (long r = 0; r < L; ++r) {
    BigInt prev = 0;
    for (long m = r; m <= 2000; m += L) {
      BigInt cur = count3(a1, a2, a3, m);
      EXPECT_GE(cur, prev);
      prev = cur;
    }
  }
}

TEST(Denumerant, LargeValues) {
  BigInt a1("1000000007"), a2("998244353"), a3("1000000000039");
  BigInt m("123456789012345678901234567");
  BigInt c = count3(a1, a2, a3, m);
  EXPECT_EQ(count3(a3, a1, a2, m), c);
  EXPECT_GE(c, 0);
  EXPECT_EQ(count2(a1, a2, m), count2(a2, a1, m));
}

TEST(DenumerantSymbolic, TwoCoefficients) {
  QuasiPoly c = count2_symbolic(N("n"), N("n+1"), N("n*(n+1)"));
  EXPECT_TRUE(equals(c, QuasiPoly::constant(2)));
  for (BigInt n = c.lower_boundary() + 1; n <= c.lower_boundary() + 200; ++n)
    ASSERT_EQ(c(n), count2(n, n + 1, n * (n + 1)));

  QuasiPoly ones = count2_symbolic(QuasiPoly::constant(1), QuasiPoly::constant(1), N("n"));
  EXPECT_TRUE(equals(ones, N("n+1")));

  QuasiPoly twos = count2_symbolic(QuasiPoly::constant(2), QuasiPoly::constant(2), N("n"));
  EXPECT_EQ(twos.period(), 2u);
  for (BigInt n = twos.lower_boundary() + 1; n <= 100; ++n)
    EXPECT_EQ(twos(n), n % 2 == 0 ? BigInt(n / 2 + 1) : BigInt(0));
}

TEST(DenumerantSymbolic, TwoCoefficientsMixed) {
  std::vector<std::array<const char*, 3>> cases{
      {"2*n", "3", "n^2"}, {"n", "n+2", "3*n^2+n"}, {"6", "n", "n^2-5"}, {"n", "2*n", "7"},
  };
  for (auto& c : cases) {
    QuasiPoly a1 = N(c[0]), a2 = N(c[1]), m = N(c[2]);
    QuasiPoly r = count2_symbolic(a1, a2, m);
    for (BigInt n = r.lower_boundary() + 1; n <= r.lower_boundary() + 120; ++n)
      ASSERT_EQ(r(n), count2(a1(n), a2(n), m(n))) << c[0] << "," << c[1] << "," << c[2] << " n=" << n;
  }
}

TEST(DenumerantSymbolic, ThreeCoefficientsConstant) {
  QuasiPoly r = count3_symbolic(QuasiPoly::constant(2), QuasiPoly::constant(3),
                                QuasiPoly::constant(5), N("n"));
  EXPECT_EQ(30 % r.period(), 0u);
  EXPECT_TRUE(equals(r, r.refine(30)));
  for (BigInt n = r.lower_boundary() + 1; n <= 300; ++n) ASSERT_EQ(r(n), count3(2, 3, 5, n));

  QuasiPoly tri = count3_symbolic(QuasiPoly::constant(1), QuasiPoly::constant(1),
                                  QuasiPoly::constant(1), N("n"));
  EXPECT_LE(tri.period(), 2u);
  for (BigInt n = tri.lower_boundary() + 1; n <= 100; ++n) EXPECT_EQ(tri(n), (n + 1) * (n + 2) / 2);
}

TEST(DenumerantSymbolic, ThreeCoefficientsPolynomial) {
  QuasiPoly r = count3_symbolic(N("n"), N("n+1"), N("n+2"), N("n*(n+1)"));
  for (BigInt n = r.lower_boundary() + 1; n <= r.lower_boundary() + 100; ++n)
    ASSERT_EQ(r(n), count3(n, n + 1, n + 2, n * (n + 1))) << n;
}

TEST(DenumerantSymbolic, RejectsNonPositive) {
  EXPECT_THROW(count2_symbolic(N("n"), N("1-n"), N("n")), DomainError);
  EXPECT_THROW(count3_symbolic(N("n"), N("n"), QuasiPoly(), N("n")), DomainError);
}
