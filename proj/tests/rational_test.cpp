#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "seqsched/rational.hpp"

using seqsched::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_LT(b, a);
  EXPECT_TRUE(Rational(4).is_integer());
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(big * Rational(2), std::overflow_error);
  EXPECT_NO_THROW(big * Rational(1, 2));
}

TEST(Rational, ComparesWithoutOverflow) {
  const Rational a(std::numeric_limits<std::int64_t>::max() - 1, std::numeric_limits<std::int64_t>::max());
  EXPECT_LT(a, Rational(1));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("+.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("99999999999999999999"), std::overflow_error);
}

TEST(Rational, Formatting) {
  EXPECT_EQ(Rational(387, 100).to_string(), "387/100");
  EXPECT_EQ(Rational(-3).to_string(), "-3");
  EXPECT_EQ(seqsched::with_approx(Rational(387, 100)), "387/100 (3.87)");
  EXPECT_EQ(seqsched::with_approx(Rational(59, 40)), "59/40 (1.475)");
}
