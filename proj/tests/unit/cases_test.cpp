#include "core/arith.hpp"
#include "core/cases.hpp"
#include "core/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qpart;
using qpart::testing::N;
using qpart::testing::P;

TEST(Cases, FloorDivSplitsByPeriod) {
  std::vector<QuasiPoly> in{N("n")};
  auto out = evaluate_by_cases(in, [](std::span<const SymInt> x) {
    return std::vector<SymInt>{floor_div(x[0], SymInt(3)), mod_pos(x[0], SymInt(3))};
  });
  EXPECT_EQ(out[0].period(), 3u);
  for (BigInt n = out[0].lower_boundary() + 1; n <= 60; ++n) {
    EXPECT_EQ(out[0](n), n / 3);
    EXPECT_EQ(out[1](n), n % 3);
  }
}

TEST(Cases, SignRaisesBoundary) {
  std::vector<QuasiPoly> in{N("n - 40")};
  auto out = evaluate_by_cases(in, [](std::span<const SymInt> x) {
    return std::vector<SymInt>{sign(x[0]) > 0 ? x[0] : SymInt(0)};
  });
  EXPECT_GE(out[0].lower_boundary(), 40);
  EXPECT_TRUE(equals(out[0], N("n - 40")));
}

TEST(Cases, ExactDivSplitsOnRationalCoefficients) {
  std::vector<QuasiPoly> in{N("n*(n+1)")};
  auto out = evaluate_by_cases(in, [](std::span<const SymInt> x) {
    return std::vector<SymInt>{exact_div(x[0], SymInt(2))};
  });
  for (BigInt n = out[0].lower_boundary() + 1; n <= 80; ++n) EXPECT_EQ(out[0](n), n * (n + 1) / 2);

  std::vector<QuasiPoly> bad{N("n")};
  EXPECT_THROW(evaluate_by_cases(bad,
                                 [](std::span<const SymInt> x) {
                                   return std::vector<SymInt>{exact_div(x[0], SymInt(2))};
                                 }),
               InvariantViolation);
}

TEST(Cases, GenericGcdMatchesPointwise) {
  std::vector<QuasiPoly> in{N("n^2 + 1"), N("n + 3")};
  auto out = evaluate_by_cases(in, [](std::span<const SymInt> x) {
    return std::vector<SymInt>{gcd_of(x[0], x[1])};
  });
  for (BigInt n = out[0].lower_boundary() + 1; n <= 300; ++n)
    EXPECT_EQ(out[0](n), qpart::testing::gcd_int(n * n + 1, n + 3));
  EXPECT_EQ(out[0].period(), 10u);
}

TEST(Cases, PeriodCapAborts) {
  std::vector<QuasiPoly> in{N("n")};
  EXPECT_THROW(evaluate_by_cases(
                   in,
                   [](std::span<const SymInt> x) {
                     return std::vector<SymInt>{floor_div(x[0], SymInt(1009))};
                   },
                   100),
               DomainError);
}
