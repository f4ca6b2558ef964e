#include "core/errors.hpp"
#include "core/intpoly.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qpart;
using qpart::testing::P;

TEST(IntPoly, EvalBasics) {
  EXPECT_EQ(PolyZ()(123), 0);
  EXPECT_EQ(P({0, 0, 1})(7), 49);
  EXPECT_EQ(P({1, 2})(10), 21);
}

TEST(IntPoly, CanonicalFormDropsHighZeros) {
  PolyZ p = P({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(P({0, 0}).degree(), -1);
  EXPECT_TRUE(P({0}).is_zero());
  EXPECT_EQ(P({3, 1}) - P({3, 1}), PolyZ());
}

TEST(IntPoly, EventualSign) {
  EXPECT_EQ(eventual_sign(P({0, -100, 3})), 1);
  EXPECT_EQ(eventual_sign(P({1000000, -1})), -1);
  EXPECT_EQ(eventual_sign(PolyZ()), 0);
}

TEST(IntPoly, AbsPoly) {
  EXPECT_EQ(abs_poly(P({3, -2})), P({-3, 2}));
  EXPECT_EQ(abs_poly(P({0, 5})), P({0, 5}));
  EXPECT_EQ(abs_poly(PolyZ()), PolyZ());
}

TEST(IntPoly, StableBoundSatisfiesContract) {
  EXPECT_EQ(stable_bound({}), 0);
  std::vector<PolyZ> one{P({-5, 1})};
  BigInt n1 = stable_bound(one);
  EXPECT_GE(n1, 5);
  for (BigInt n = n1 + 1; n <= n1 + 50; ++n) EXPECT_GT(one[0](n), 0);

  std::vector<PolyZ> two{P({0, -10, 1})};
  BigInt n2 = stable_bound(two);
  EXPECT_GE(n2, 10);
  for (BigInt n = n2 + 1; n <= n2 + 50; ++n) EXPECT_GT(two[0](n), 0);
}

TEST(IntPoly, StableBoundRatioGap) {
  // |(3x + 7) / (x^2 - 4)| < 1/10 for all n above the bound.
  RatioGap r{P({7, 3}), P({-4, 0, 1}), BigRat(1, 10)};
  std::vector<RatioGap> gaps{r};
  BigInt N = stable_bound({}, gaps);
  for (BigInt n = N + 1; n <= N + 200; ++n) {
    BigRat v(r.numerator(n), r.denominator(n));
    v.canonicalize();
    EXPECT_LT(abs(v), r.gap) << n;
  }
  std::vector<RatioGap> bad{{P({1}), P({0, 1}), BigRat(0)}};
  EXPECT_THROW(stable_bound({}, bad), DomainError);
}

TEST(IntPoly, StableBoundSignProperty) {
  qpart::testing::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    PolyZ p = rng.nonzero_poly(4, 30);
    std::vector<PolyZ> ps{p};
    BigInt N = stable_bound(ps);
    for (BigInt n = N + 1; n <= N + 100; ++n) {
      EXPECT_EQ(sgn(p(n)), eventual_sign(p));
      EXPECT_EQ(abs_poly(p)(n), abs(p(n)));
    }
  }
}

TEST(IntPoly, DivideQ) {
  auto [q, s] = divide_Q(P({0, 0, 1}), P({1, 2}));
  EXPECT_EQ(q.coeff(1), BigRat(1, 2));
  EXPECT_EQ(q.coeff(0), BigRat(-1, 4));
  EXPECT_EQ(s.coeff(0), BigRat(1, 4));
  EXPECT_EQ(s.degree(), 0);

  auto [q2, s2] = divide_Q(P({1, 1}), P({1, 1}));
  EXPECT_EQ(q2, PolyQ(P({1})));
  EXPECT_TRUE(s2.is_zero());

  auto [q3, s3] = divide_Q(P({3}), P({0, 1}));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(s3, PolyQ(P({3})));

  EXPECT_THROW(divide_Q(P({1}), PolyZ()), DomainError);
}

TEST(IntPoly, DivideQReconstruction) {
  qpart::testing::Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    PolyZ f = rng.poly(5, 20);
    PolyZ g = rng.nonzero_poly(3, 20);
    auto [q, s] = divide_Q(f, g);
    EXPECT_LT(s.degree(), g.degree());
    for (int k = 0; k < 50; ++k) {
      BigInt n = rng.uniform(-1000, 1000);
      EXPECT_EQ(q(n) * BigRat(g(n)) + s(n), BigRat(f(n)));
    }
  }
}

TEST(IntPoly, PolyQNormalizes) {
  PolyQ a({BigInt(2), BigInt(4)}, BigInt(6));
  EXPECT_EQ(a.denominator(), 3);
  EXPECT_EQ(a.numerator(), P({1, 2}));
  PolyQ b({BigInt(1), BigInt(3)}, BigInt(-2));
  EXPECT_EQ(b.denominator(), 2);
  EXPECT_EQ(b.numerator(), P({-1, -3}));
  EXPECT_EQ(PolyQ({BigInt(1), BigInt(1), BigInt(3)}, BigInt(6)).nonconstant_denominator(), 6);
  EXPECT_EQ(PolyQ({BigInt(1), BigInt(2)}, BigInt(4)).nonconstant_denominator(), 2);
}

TEST(IntPoly, ComposeAffine) {
  PolyZ p = P({1, 0, 1});  // x^2 + 1
  PolyZ c = p.compose_affine(2, 3);
  for (int x = -10; x <= 10; ++x) EXPECT_EQ(c(x), p(BigInt(2 * x + 3)));
}

TEST(IntPoly, ParseGrammar) {
  EXPECT_EQ(parse_poly("n^2 - 3*n + 1"), P({1, -3, 1}));
  EXPECT_EQ(parse_poly(" ( n + 1 ) * ( n - 1 ) "), P({-1, 0, 1}));
  EXPECT_EQ(parse_poly("-n"), P({0, -1}));
  EXPECT_EQ(parse_poly("2*(n+1)^3"), P({2, 6, 6, 2}));
  EXPECT_EQ(parse_poly("123456789012345678901234567890"),
            PolyZ::constant(BigInt("123456789012345678901234567890")));
  EXPECT_THROW(parse_poly("n +"), ParseError);
  EXPECT_THROW(parse_poly("x"), ParseError);
  EXPECT_THROW(parse_poly("(n"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
}

TEST(IntPoly, ToStringRoundTrips) {
  qpart::testing::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    PolyZ p = rng.poly(5, 50);
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
  }
}
