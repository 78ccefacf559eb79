#include <gtest/gtest.h>

#include <cmath>
#include <optional>
#include <vector>

#include "oracles.hpp"
#include "spherechi/fw_bound.hpp"

using namespace spherechi;

namespace {

std::uint64_t oracle_next_prime(double x) {
  auto k = static_cast<std::uint64_t>(std::floor(x)) + 1;
  while (!oracle::trial_division_prime(k)) ++k;
  return k;
}

}  // namespace

TEST(DeriveInstance, Examples) {
  const FWInstance a = derive_instance(9, 0.6);
  EXPECT_EQ(a.m, 8);
  EXPECT_NEAR(a.a_prime, -28.0 / 9.0, 1e-12);
  EXPECT_EQ(a.p, 3U);
  EXPECT_EQ(a.a, -4);
  EXPECT_EQ(a.valid, FWStatus::Ok);

  const FWInstance b = derive_instance(9, 0.51);
  EXPECT_EQ(b.p, 5U);
  EXPECT_EQ(b.valid, FWStatus::PrimeTooLarge);

  const FWInstance c = derive_instance(5, 0.6);
  EXPECT_EQ(c.m, 4);
  EXPECT_EQ(c.p, 2U);
  EXPECT_EQ(c.valid, FWStatus::PrimeDividesModulus);

  EXPECT_EQ(derive_instance(4, 0.6).valid, FWStatus::Degenerate);
  EXPECT_THROW(derive_instance(9, 0.5), Error);
}

TEST(DeriveInstance, PipelineAgainstOracle) {
  for (std::int64_t n = 5; n <= 400; ++n) {
    for (double r : {0.55, 0.6, 0.65, 0.7}) {
      const FWInstance inst = derive_instance(n, r);
      ASSERT_EQ(inst.m % 4, 0);
      ASSERT_LT(inst.m, n);
      ASSERT_GE(inst.m, n - 4);
      const auto m = static_cast<double>(inst.m);
      ASSERT_EQ(inst.p, oracle_next_prime(m / (8.0 * r * r)));
      ASSERT_EQ(inst.a, inst.m - 4 * static_cast<std::int64_t>(inst.p));
      ASSERT_LT(static_cast<double>(inst.a), inst.a_prime);
      ASSERT_LT(inst.m - 8 * static_cast<std::int64_t>(inst.p), -inst.m);
      if (inst.valid == FWStatus::Ok) {
        ASSERT_GT(4 * inst.p, static_cast<std::uint64_t>(inst.m));
        ASSERT_LE(2 * inst.p, static_cast<std::uint64_t>(inst.m));
        ASSERT_NE(4 % inst.p, 0U);
      }
    }
  }
}

TEST(LowerBound, Examples) {
  const FWBoundReport a = lower_bound(derive_instance(9, 0.6));
  EXPECT_EQ(a.bound.lower_bound.str(), "5/4");
  EXPECT_FALSE(a.bound.exceeds_lovasz);

  const FWBoundReport b = lower_bound(derive_instance(13, 0.6));
  EXPECT_EQ(b.instance.m, 12);
  EXPECT_EQ(b.instance.p, 5U);
  EXPECT_EQ(b.bound.lower_bound.str(), "7/6");

  EXPECT_THROW(lower_bound(derive_instance(9, 0.51)), Error);
  const FWBoundReport c = lower_bound(derive_instance(5, 0.6));
  EXPECT_FALSE(c.bound.warnings.empty());
}

TEST(LowerBound, PEqualsHalfMGivesOne) {
  FWInstance inst;
  inst.n = 9;
  inst.r = 0.6;
  inst.m = 10;
  inst.p = 5;
  inst.valid = FWStatus::Ok;
  const FWBoundReport rep = lower_bound(inst);
  EXPECT_EQ(rep.bound.lower_bound.str(), "1/1");
  EXPECT_FALSE(rep.bound.exceeds_lovasz);
}

TEST(LowerBound, ExceedsLovaszIsExactComparison) {
  for (std::int64_t n = 5; n <= 300; n += 7) {
    const FWInstance inst = derive_instance(n, 0.7);
    if (inst.valid != FWStatus::Ok) continue;
    const FWBoundReport rep = lower_bound(inst);
    const auto& q = rep.bound.lower_bound;
    EXPECT_EQ(rep.bound.exceeds_lovasz, q.numerator > BigInt(n + 1) * q.denominator);
  }
}

TEST(LowerBound, NondecreasingInRadius) {
  for (std::int64_t n : {60, 150, 400}) {
    std::optional<ExactRatio> previous;
    for (int i = 0; i < 100; ++i) {
      const double r = 0.505 + (kInvSqrt2 - 0.505) * i / 99.0;
      const FWInstance inst = derive_instance(n, r);
      if (inst.valid != FWStatus::Ok) continue;
      const ExactRatio now = lower_bound(inst).bound.lower_bound;
      if (previous) ASSERT_FALSE(now < *previous) << n << " " << r;
      previous = now;
    }
  }
}

TEST(Gamma, Examples) {
  EXPECT_NEAR(gamma_of_r(kInvSqrt2), 1.13984, 1e-4);
  EXPECT_NEAR(gamma_of_r(0.6), 1.0485, 1e-4);
  EXPECT_DOUBLE_EQ(gamma_of_r(0.5), 1.0);
  EXPECT_THROW(gamma_of_r(0.8), Error);
}

TEST(Gamma, IncreasingOnDomain) {
  double previous = gamma_of_r(0.5005);
  for (double r = 0.501; r <= kInvSqrt2; r += 0.0005) {
    const double g = gamma_of_r(r);
    ASSERT_GT(g, previous);
    previous = g;
  }
}

TEST(Gamma, FiniteBoundApproachesExponent) {
  const double r = 0.65;
  const FWBoundReport rep = lower_bound(derive_instance(4000, r));
  const double rate = rep.bound.lower_bound.log_value / 4000.0;
  const double target = std::log(gamma_of_r(r));
  EXPECT_LE(std::abs(rate - target) / target, 0.03);
}

TEST(Theorem5Condition, Examples) {
  EXPECT_TRUE(theorem5_condition(1000, 0.7, 1.9));
  EXPECT_FALSE(theorem5_condition(9, 0.6, 1.9));
  EXPECT_THROW(theorem5_condition(1000, 0.7, 2.5), Error);
}

TEST(Threshold, NoThresholdAtSmallN) {
  EXPECT_THROW(lovasz_threshold_radius(9, 1e-6), Error);
}

TEST(Threshold, BisectionPostconditionAndMonotone) {
  double previous = 1.0;
  for (std::int64_t n : {500, 1000, 2000}) {
    const ThresholdResult th = lovasz_threshold_radius(n, 1e-6);
    EXPECT_TRUE(exceeds_lovasz_at(n, th.radius));
    EXPECT_FALSE(exceeds_lovasz_at(n, th.radius - 1e-6));
    EXPECT_LE(th.radius - th.below, 1e-6);
    EXPECT_LE(th.radius, previous);
    previous = th.radius;
  }
}
