#include <gtest/gtest.h>

#include "oracles.hpp"
#include "omega/checked.hpp"
#include "omega/errors.hpp"
#include "omega/metric.hpp"
#include "omega/random.hpp"

namespace omega {
namespace {

using Path = std::vector<std::uint64_t>;

TEST(DistTest, Examples) {
  EXPECT_EQ(dist(11, 12), 4u);
  EXPECT_EQ(dist(6, 6), 0u);
  EXPECT_EQ(dist(8, 9), 5u);
  EXPECT_EQ(dist(12, 18), 2u);
}

TEST(DistTest, ZeroIsRejected) {
  EXPECT_THROW(dist(0, 5), InvalidArgument);
  EXPECT_THROW(dist(5, 0), InvalidArgument);
  EXPECT_THROW(dist_via_lcm_gcd(0, 1), InvalidArgument);
}

TEST(DistTest, WellDefinedWhenLcmOverflows) {
  // lcm(2^63, 3^40) is far beyond 64 bits.
  const std::uint64_t a = 1ULL << 63;
  const std::uint64_t b = *checked_pow(3, 40);
  EXPECT_EQ(dist(a, b), 103u);
  EXPECT_EQ(dist_via_lcm_gcd(a, b), 103u);
}

TEST(DistTest, MatchesTrialDivisionOracle) {
  SplitMix64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng.uniform(1, 10'000'000);
    const std::uint64_t b = rng.uniform(1, 10'000'000);
    ASSERT_EQ(dist(a, b), oracle::trial_dist(a, b)) << a << ", " << b;
  }
}

TEST(DistViaLcmGcdTest, Examples) {
  EXPECT_EQ(dist_via_lcm_gcd(12, 18), 2u);
  EXPECT_EQ(dist_via_lcm_gcd(7, 7), 0u);
  EXPECT_EQ(dist_via_lcm_gcd(11, 12), 4u);
}

TEST(LcmGcdExponentsTest, Examples) {
  auto check = [](std::uint64_t a, std::uint64_t b, std::uint64_t lcm, std::uint64_t gcd) {
    const auto result = lcm_gcd_exponents(a, b);
    EXPECT_EQ(result.lcm.value(), lcm) << a << ", " << b;
    EXPECT_EQ(result.gcd.value(), gcd) << a << ", " << b;
  };
  check(12, 18, 36, 6);
  check(5, 7, 35, 1);
  check(4, 8, 8, 4);
  EXPECT_TRUE(lcm_gcd_exponents(5, 7).gcd.is_one());
}

TEST(IsUnitStepTest, Examples) {
  EXPECT_EQ(is_unit_step(11, 22), 2u);
  EXPECT_EQ(is_unit_step(22, 11), 2u);
  EXPECT_EQ(is_unit_step(11, 12), std::nullopt);
  EXPECT_EQ(is_unit_step(1, 13), 13u);
  EXPECT_EQ(is_unit_step(5, 5), std::nullopt);
  EXPECT_EQ(is_unit_step(3, 12), std::nullopt);
}

TEST(IsUnitStepTest, CharacterizesPrimeRatios) {
  constexpr std::uint64_t kMax = 10'000;
  std::vector<bool> prime(kMax + 1);
  for (std::uint64_t q = 0; q <= kMax; ++q) prime[q] = oracle::trial_is_prime(q);
  for (std::uint64_t a = 1; a <= kMax; ++a) {
    for (std::uint64_t b = a + 1; b <= kMax; ++b) {
      const bool expected = b % a == 0 && prime[b / a];
      ASSERT_EQ(is_unit_step(a, b).has_value(), expected) << a << ", " << b;
    }
  }
}

TEST(GeodesicTest, Examples) {
  EXPECT_EQ(geodesic_through(11, 12, Waypoint::kGcd), (Path{11, 1, 2, 4, 12}));
  EXPECT_EQ(geodesic_through(6, 6, Waypoint::kGcd), (Path{6}));
  EXPECT_EQ(geodesic_through(4, 6, Waypoint::kLcm), (Path{4, 12, 6}));
  EXPECT_EQ(geodesic_through(11, 12, Waypoint::kLcm), (Path{11, 22, 44, 132, 12}));
}

TEST(GeodesicTest, LcmOverflowIsOutOfRange) {
  const std::uint64_t a = 1ULL << 63;
  const std::uint64_t b = *checked_pow(3, 40);
  EXPECT_THROW(geodesic_through(a, b, Waypoint::kLcm), OutOfRange);
  const Path path = geodesic_through(a, b, Waypoint::kGcd);
  EXPECT_EQ(path.size(), 104u);
  EXPECT_EQ(path[63], 1u);
}

// Random-sample properties: one draw stream per property.
class MetricPropertyTest : public ::testing::Test {
 protected:
  SplitMix64 rng{2024};
  std::uint64_t draw() { return rng.uniform(1, 1'000'000); }
};

TEST_F(MetricPropertyTest, Axioms) {
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = draw(), b = draw(), c = draw();
    ASSERT_EQ(dist(a, a), 0u);
    ASSERT_EQ(dist(a, b) == 0, a == b);
    ASSERT_EQ(dist(a, b), dist(b, a));
    ASSERT_LE(dist(a, c), dist(a, b) + dist(b, c)) << a << " " << b << " " << c;
  }
}

TEST_F(MetricPropertyTest, FormulaEquivalence) {
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = draw(), b = draw();
    ASSERT_EQ(dist(a, b), dist_via_lcm_gcd(a, b)) << a << ", " << b;
  }
}

TEST_F(MetricPropertyTest, MultiplicativeInvariance) {
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = draw(), b = draw(), c = draw();
    ASSERT_EQ(dist(a * c, b * c), dist(a, b)) << a << " " << b << " " << c;
  }
}

TEST_F(MetricPropertyTest, GeodesicAdditivity) {
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = draw(), b = draw();
    const auto [l, g] = lcm_gcd_exponents(a, b);
    const auto fa = factor(a), fb = factor(b);
    ASSERT_EQ(dist(fa, l) + dist(l, fb), dist(a, b));
    ASSERT_EQ(dist(fa, g) + dist(g, fb), dist(a, b));
    // ab = lcm * gcd, exponentwise.
    ASSERT_EQ(fa * fb, l * g);
  }
}

TEST_F(MetricPropertyTest, GeodesicPathsAreShortestUnitStepPaths) {
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = draw(), b = draw();
    for (Waypoint via : {Waypoint::kLcm, Waypoint::kGcd}) {
      const Path path = geodesic_through(a, b, via);
      ASSERT_EQ(path.front(), a);
      ASSERT_EQ(path.back(), b);
      ASSERT_EQ(path.size(), dist(a, b) + 1);
      for (std::size_t k = 1; k < path.size(); ++k) {
        ASSERT_TRUE(is_unit_step(path[k - 1], path[k])) << path[k - 1] << " -> " << path[k];
      }
    }
  }
}

TEST(BallCharacterizationTest, UnitBallAroundOneIsOneAndPrimes) {
  std::vector<std::uint64_t> ball;
  for (std::uint64_t y = 1; y <= 100; ++y) {
    if (dist(1, y) <= 1) ball.push_back(y);
  }
  std::vector<std::uint64_t> expected{1};
  for (std::uint64_t y = 2; y <= 100; ++y) {
    if (oracle::trial_is_prime(y)) expected.push_back(y);
  }
  EXPECT_EQ(ball, expected);
  EXPECT_EQ(ball.size(), 26u);
}

}  // namespace
}  // namespace omega
