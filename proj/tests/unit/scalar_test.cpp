#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tmap/interval.hpp"

namespace tmap {
namespace {

using testing::S;

TEST(Scalar, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(S("3/20"), Scalar(3, 20));
  EXPECT_EQ(S("6/40"), Scalar(3, 20));
  EXPECT_EQ(S("0.15"), Scalar(3, 20));
  EXPECT_EQ(S("-2.5e-1"), Scalar(-1, 4));
  EXPECT_EQ(S("20"), Scalar(20));
  EXPECT_EQ(S("1e2"), Scalar(100));
  EXPECT_EQ(S(".5"), Scalar(1, 2));
}

TEST(Scalar, RejectsGarbage) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1..2", "--1", "1e", "."})
    EXPECT_THROW(S(bad), DomainError) << bad;
}

TEST(Scalar, CanonicalText) {
  EXPECT_EQ(Scalar(4, 6).str(), "2/3");
  EXPECT_EQ(Scalar(-4, 2).str(), "-2");
  EXPECT_EQ(Scalar(3, -9).str(), "-1/3");
  EXPECT_EQ(S(Scalar(7, 13).str()), Scalar(7, 13));
}

TEST(Scalar, DyadicHelpers) {
  EXPECT_EQ(dyadic(7), Scalar(1, 128));
  EXPECT_EQ(largest_dyadic_below(Scalar(1, 100)), Scalar(1, 128));
  EXPECT_EQ(largest_dyadic_below(Scalar(1, 64)), Scalar(1, 128));
  EXPECT_EQ(largest_dyadic_below(Scalar(2)), Scalar(1));
  EXPECT_THROW(largest_dyadic_below(Scalar(0)), DomainError);
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_THROW(Scalar(1) / Scalar(0), DomainError); }

// Arithmetic on inline values must agree with GMP, including across the
// 64-bit boundary where values move to and from the big representation.
TEST(Scalar, AgreesWithGmpAcrossTheInlineBoundary) {
  testing::Rng rng(7);
  auto draw = [&rng]() -> mpq_class {
    const int bits = static_cast<int>(rng.below(4));
    const int shift = bits == 0 ? 3 : bits == 1 ? 31 : bits == 2 ? 62 : 90;
    mpz_class num(static_cast<unsigned long>(rng.below(1UL << 62)));
    mpz_class den(static_cast<unsigned long>(1 + rng.below(1UL << 62)));
    num >>= static_cast<unsigned long>(62 - std::min(62, shift));
    den >>= static_cast<unsigned long>(62 - std::min(62, shift));
    if (shift > 62) num <<= static_cast<unsigned long>(shift - 62);
    if (den == 0) den = 1;
    if (rng.below(2)) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };
  for (int trial = 0; trial < 20000; ++trial) {
    const mpq_class a = draw(), b = draw();
    const Scalar x(a), y(b);
    ASSERT_EQ((x + y).to_mpq(), mpq_class(a + b));
    ASSERT_EQ((x - y).to_mpq(), mpq_class(a - b));
    ASSERT_EQ((x * y).to_mpq(), mpq_class(a * b));
    if (b != 0) ASSERT_EQ((x / y).to_mpq(), mpq_class(a / b));
    ASSERT_EQ(x < y, a < b);
    ASSERT_EQ(x == y, a == b);
    ASSERT_EQ(x.floor(), Scalar(a).floor());
    ASSERT_EQ(Scalar::parse(x.str()), x);
    // Results that fit inline compare equal to freshly built inline values.
    const Scalar back = (x + y) - y;
    ASSERT_EQ(back, x);
  }
  const Scalar huge = Scalar(std::int64_t{1} << 62) * Scalar(16);
  EXPECT_EQ(huge.str(), "73786976294838206464");
  EXPECT_EQ(huge / Scalar(16), Scalar(std::int64_t{1} << 62));
  EXPECT_EQ(Scalar(-7, 2).floor(), -4);
  EXPECT_EQ(Scalar(-7, 2).ceil(), -3);
  EXPECT_EQ(Scalar(7, 2).floor(), 3);
  EXPECT_EQ(Scalar(7, 2).ceil(), 4);
}

TEST(Interval, EnforcesUnitBounds) {
  EXPECT_THROW(Interval(S("-1/10"), S("1/2")), DomainError);
  EXPECT_THROW(Interval(S("1/2"), S("11/10")), DomainError);
  EXPECT_THROW(Interval(S("1/2"), S("1/3")), DomainError);
  EXPECT_NO_THROW(Interval(S("1/2"), S("1/2")));
}

TEST(IntervalSet, MergesOverlappingAndTouchingComponents) {
  IntervalSet s({testing::I("1/2", "3/4"), testing::I("0", "1/4"), testing::I("1/4", "1/3"),
                 testing::I("5/8", "7/8")});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.components()[0], testing::I("0", "1/3"));
  EXPECT_EQ(s.components()[1], testing::I("1/2", "7/8"));
  EXPECT_TRUE(s.contains(testing::I("1/10", "1/5")));
  EXPECT_FALSE(s.contains(testing::I("1/4", "1/2")));
  EXPECT_TRUE(s.contains(IntervalSet(testing::I("3/5", "7/10"))));
}

}  // namespace
}  // namespace tmap
