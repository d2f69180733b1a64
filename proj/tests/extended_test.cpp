#include <gtest/gtest.h>

#include "oracles.hpp"
#include "omega/errors.hpp"
#include "omega/extended.hpp"
#include "omega/metric.hpp"
#include "omega/random.hpp"

namespace omega {
namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

ExtendedNumber ext(std::initializer_list<RationalPower> entries) {
  return ExtendedNumber(std::vector<RationalPower>(entries));
}

ExtendedNumber root_of(std::uint64_t a, std::uint64_t k) { return nth_root(from_rational(a, 1), k); }

TEST(RationalTest, ReducesAndNormalizesSign) {
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(3, -6), q(-1, 2));
  EXPECT_EQ(q(3, -6).den(), 2);
  EXPECT_EQ(q(0, 5), q(0));
  EXPECT_THROW(q(1, 0), InvalidArgument);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(1, 2) / q(1, 4), q(2));
  EXPECT_EQ(abs(q(-7, 3)), q(7, 3));
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_GT(q(-1, 3), q(-1, 2));
  EXPECT_THROW(q(1) / q(0), InvalidArgument);
}

TEST(RationalTest, OverflowIsAnError) {
  const Rational huge(static_cast<i128>(1) << 126, 1);
  EXPECT_THROW(huge + huge, OutOfRange);
  EXPECT_THROW(huge * q(2), OutOfRange);
  const Rational tiny(1, static_cast<i128>(1) << 126);
  EXPECT_THROW(tiny * Rational(1, 4), OutOfRange);
}

TEST(RationalTest, Printing) {
  EXPECT_EQ(to_string(q(1, 6)), "1/6");
  EXPECT_EQ(to_string(q(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(q(2)), "2");
  EXPECT_EQ(to_string(q(0)), "0");
}

TEST(FromRationalTest, Examples) {
  EXPECT_EQ(from_rational(3, 2), ext({{2, q(-1)}, {3, q(1)}}));
  EXPECT_EQ(from_rational(6, 6), ExtendedNumber());
  EXPECT_EQ(from_rational(12, 1), ext({{2, q(2)}, {3, q(1)}}));
  EXPECT_THROW(from_rational(0, 1), InvalidArgument);
  EXPECT_THROW(from_rational(1, 0), InvalidArgument);
}

TEST(NthRootTest, Examples) {
  EXPECT_EQ(root_of(2, 2), ext({{2, q(1, 2)}}));
  const ExtendedNumber x = from_rational(18, 35);
  EXPECT_EQ(nth_root(x, 1), x);
  EXPECT_EQ(root_of(8, 3), ext({{2, q(1)}}));
  EXPECT_THROW(nth_root(x, 0), InvalidArgument);
}

TEST(ExtDistTest, Examples) {
  EXPECT_EQ(ext_dist(from_rational(1, 2), from_rational(3, 1)), q(2));
  const ExtendedNumber x = root_of(12, 5);
  EXPECT_EQ(ext_dist(x, x), q(0));
  EXPECT_EQ(ext_dist(root_of(2, 2), root_of(2, 3)), q(1, 6));
}

TEST(ExtBigOmegaTest, Examples) {
  EXPECT_EQ(ext_big_omega(from_rational(3, 2)), q(0));
  EXPECT_EQ(ext_big_omega(ExtendedNumber()), q(0));
  EXPECT_EQ(ext_big_omega(root_of(2, 2)), q(1, 2));
}

TEST(EmbedTest, Examples) {
  EXPECT_EQ(embed(from_rational(12, 1)).prefix(4), (std::vector<Rational>{q(2), q(1), q(0), q(0)}));
  EXPECT_TRUE(embed(ExtendedNumber()).support.empty());
  EXPECT_EQ(embed(ExtendedNumber()).prefix(3), (std::vector<Rational>{q(0), q(0), q(0)}));
  EXPECT_EQ(embed(from_rational(12, 1)).at(7), q(0));
  EXPECT_EQ(embed(from_rational(1, 97)).at(25), q(-1));
  EXPECT_EQ(l1_distance(embed(from_rational(8, 1)), embed(from_rational(9, 1))), q(5));
}

TEST(ExtendedNumberTest, RejectsNonCanonicalEntries) {
  EXPECT_THROW(ext({{2, q(0)}}), InvalidArgument);
  EXPECT_THROW(ext({{6, q(1)}}), InvalidArgument);
  EXPECT_THROW(ext({{3, q(1)}, {2, q(1)}}), InvalidArgument);
}

TEST(ExtendedNumberTest, ProductCancelsExponents) {
  EXPECT_EQ(from_rational(3, 2) * from_rational(2, 3), ExtendedNumber());
  EXPECT_EQ(root_of(2, 2) * root_of(2, 2), from_rational(2, 1));
}

TEST(ParseExtendedTest, Literals) {
  EXPECT_EQ(parse_extended("12"), from_rational(12, 1));
  EXPECT_EQ(parse_extended("3/2"), from_rational(3, 2));
  EXPECT_EQ(parse_extended("root(2, 2)"), root_of(2, 2));
  EXPECT_EQ(parse_extended(" root(3,8/27) "), from_rational(2, 3));
  EXPECT_THROW(parse_extended("root(2, 2"), InvalidArgument);
  EXPECT_THROW(parse_extended("root(2)"), InvalidArgument);
  EXPECT_THROW(parse_extended("-3"), InvalidArgument);
  EXPECT_THROW(parse_extended("0/4"), InvalidArgument);
  EXPECT_THROW(parse_extended("x"), InvalidArgument);
  EXPECT_THROW(parse_extended("99999999999999999999"), OutOfRange);
  EXPECT_THROW(parse_extended("root(0, 2)"), InvalidArgument);
}

TEST(ParseExtendedTest, Printing) {
  EXPECT_EQ(to_string(from_rational(3, 2)), "2^(-1) * 3");
  EXPECT_EQ(to_string(root_of(12, 2)), "2 * 3^(1/2)");
  EXPECT_EQ(to_string(ExtendedNumber()), "1");
}

class ExtendedPropertyTest : public ::testing::Test {
 protected:
  SplitMix64 rng{99};
  ExtendedNumber draw() {
    return nth_root(from_rational(rng.uniform(1, 10'000), rng.uniform(1, 10'000)),
                    rng.uniform(1, 6));
  }
};

TEST_F(ExtendedPropertyTest, RestrictsToNaturalMetric) {
  for (int i = 0; i < 10'000; ++i) {
    const std::uint64_t a = rng.uniform(1, 1'000'000), b = rng.uniform(1, 1'000'000);
    ASSERT_EQ(ext_dist(from_rational(a, 1), from_rational(b, 1)),
              q(static_cast<std::int64_t>(oracle::trial_dist(a, b))));
  }
}

TEST_F(ExtendedPropertyTest, MetricAxiomsExact) {
  for (int i = 0; i < 10'000; ++i) {
    const ExtendedNumber x = draw(), y = draw(), z = draw();
    ASSERT_EQ(ext_dist(x, x), q(0));
    ASSERT_EQ(ext_dist(x, y).is_zero(), x == y);
    ASSERT_GE(ext_dist(x, y), q(0));
    ASSERT_EQ(ext_dist(x, y), ext_dist(y, x));
    ASSERT_LE(ext_dist(x, z), ext_dist(x, y) + ext_dist(y, z));
  }
}

TEST_F(ExtendedPropertyTest, EmbeddingIsIsometry) {
  for (int i = 0; i < 10'000; ++i) {
    const ExtendedNumber x = draw(), y = draw();
    ASSERT_EQ(l1_distance(embed(x), embed(y)), ext_dist(x, y));
  }
}

TEST_F(ExtendedPropertyTest, MultiplicativeInvariance) {
  for (int i = 0; i < 10'000; ++i) {
    const ExtendedNumber x = draw(), y = draw(), z = draw();
    ASSERT_EQ(ext_dist(x * z, y * z), ext_dist(x, y));
  }
}

}  // namespace
}  // namespace omega
