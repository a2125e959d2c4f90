#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tmap/sampling.hpp"

namespace tmap {
namespace {

using testing::S;

TEST(Sampler, StreamsAreReproducible) {
  Sampler a(5), b(5);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(a.pl_map(4), b.pl_map(4));
  EXPECT_EQ(a.curve_map(3), b.curve_map(3));
}

TEST(Sampler, LipschitzMapsRespectTheirBounds) {
  Sampler rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar lip(static_cast<long>(1 + rng.below(4)));
    const int knots = 4 + static_cast<int>(rng.below(20));
    const CurveMap f = rng.lipschitz_map(knots, lip, S("1/8"), S("7/8"));
    EXPECT_TRUE(f.is_pl());
    for (const auto& p : f.pieces()) EXPECT_LE(abs(p.c1()), lip);
    EXPECT_TRUE(Interval(S("1/8"), S("7/8")).contains(f.range_on(Interval::unit())));
    for (const auto& x : f.breakpoints()) EXPECT_TRUE((x * Scalar(knots)).is_integer());
  }
  EXPECT_THROW(rng.lipschitz_map(0, 1, 0, 1), ParameterError);
  EXPECT_THROW(rng.lipschitz_map(4, 1, S("1/2"), S("1/4")), ParameterError);
  EXPECT_THROW(rng.pl_map(0), ParameterError);
}

TEST(Sampler, IntervalsAreProper) {
  Sampler rng(10);
  for (int k = 0; k < 200; ++k) {
    const Interval j = rng.interval(4);
    EXPECT_FALSE(j.degenerate());
  }
}

}  // namespace
}  // namespace tmap
