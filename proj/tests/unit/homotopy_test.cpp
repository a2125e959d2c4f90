#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tmap/homotopy.hpp"

namespace tmap {
namespace {

using testing::I;
using testing::S;

TEST(Partition, Examples) {
  auto p = partition(Scalar(1));
  EXPECT_EQ(p.count, 0);
  EXPECT_EQ(p.cells, std::vector<Interval>{Interval::unit()});
  p = partition(S("1/2"));
  EXPECT_EQ(p.count, 1);
  EXPECT_EQ(p.cells, (std::vector<Interval>{I("0", "1/2"), I("1/2", "1")}));
  p = partition(S("2/5"));
  EXPECT_EQ(p.count, 2);
  EXPECT_EQ(p.cells, (std::vector<Interval>{I("0", "2/5"), I("2/5", "4/5"), I("4/5", "1")}));
  p = partition(S("3/10"));
  EXPECT_EQ(p.count, 3);
  EXPECT_EQ(p.cells.back(), I("9/10", "1"));
  EXPECT_THROW(partition(Scalar(0)), DomainError);
  EXPECT_THROW(partition(S("3/2")), DomainError);
}

TEST(Partition, CountIsMaximal) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar t(static_cast<long>(1 + rng.below(200)), 200);
    const auto p = partition(t);
    EXPECT_LT(Scalar(p.count) * t, Scalar(1));
    EXPECT_GE(Scalar(p.count + 1) * t, Scalar(1));
    ASSERT_EQ(p.cells.size(), static_cast<std::size_t>(p.count) + 1);
    EXPECT_EQ(p.cells.front().lo(), Scalar(0));
    EXPECT_EQ(p.cells.back().hi(), Scalar(1));
    for (std::size_t i = 1; i < p.cells.size(); ++i) EXPECT_EQ(p.cells[i].lo(), p.cells[i - 1].hi());
  }
}

TEST(BoxData, Examples) {
  auto boxes = box_data(CurveMap::identity(), Scalar(1));
  ASSERT_EQ(boxes.size(), 1u);
  EXPECT_EQ(boxes[0].params, (BoxParams{0, 1, 0, 1, 20}));
  EXPECT_EQ(boxes[0].spread, Scalar(1));

  boxes = box_data(CurveMap::constant(S("1/2")), S("1/2"));
  ASSERT_EQ(boxes.size(), 2u);
  for (const auto& b : boxes) {
    EXPECT_EQ(b.params, (BoxParams{S("1/2"), S("1/2"), 0, 1, 20}));
    EXPECT_EQ(b.spread, S("1/2"));
  }

  boxes = box_data(CurveMap::identity(), S("1/2"));
  EXPECT_EQ(boxes[0].params, (BoxParams{0, S("1/2"), 0, 1, 20}));
  EXPECT_EQ(boxes[1].params, (BoxParams{S("1/2"), 1, 0, 1, 20}));

  // Unclamped interior box: identity on [1/2, 1/2 + 1/64] pads by 4/64 on each side.
  boxes = box_data(CurveMap::identity(), S("1/64"));
  EXPECT_EQ(boxes[32].target(), I("28/64", "37/64"));
}

// |cell| <= |target| for every box, with PL and quadratic maps.
TEST(BoxData, TargetNeverShorterThanCell) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int laps = 1 + static_cast<int>(rng.below(8));
    const auto f = trial % 2 ? rng.pl_map(laps) : rng.curve_map(laps);
    const Scalar t(1, static_cast<long>(1 + rng.below(40)));
    const Scalar gamma = Scalar(20) + rng.grid(10) * Scalar(10);
    for (const auto& b : box_data(f, t, gamma)) {
      ASSERT_LE(b.cell.length(), b.target().length());
      ASSERT_EQ(b.spread, max(b.cell.length(), range_on(f, b.cell).length()));
    }
  }
}

TEST(Homotopy, IsTheMapAtTimeZero) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = rng.curve_map(1 + static_cast<int>(rng.below(6)));
    for (int gamma : {20, 25, 100}) EXPECT_EQ(sup_distance(f, apply_homotopy(f, Scalar(0), Scalar(gamma))), Scalar(0));
  }
  EXPECT_THROW(apply_homotopy(CurveMap::identity(), S("-1/2")), DomainError);
}

TEST(Homotopy, IdentityAtTimeOneIsTheUnitBoxMap) {
  const auto h = apply_homotopy(CurveMap::identity(), Scalar(1));
  const auto box = build_box_map(Interval::unit(), BoxParams{0, 1, 0, 1, 20}).to_map();
  EXPECT_EQ(h, box.map());
  EXPECT_EQ(PLMap(h).slope_floor(), Scalar(20));
}

TEST(Homotopy, ConstantMapBecomesSurjective) {
  const auto h = apply_homotopy(CurveMap::constant(S("1/2")), S("1/2"));
  EXPECT_EQ(range_on(h, I("0", "1/2")), Interval::unit());
  EXPECT_EQ(range_on(h, I("1/2", "1")), Interval::unit());
}

TEST(Homotopy, FixesJunctionsAndSteepens) {
  testing::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = trial % 2 ? rng.pl_map(1 + static_cast<int>(rng.below(6)))
                             : rng.curve_map(1 + static_cast<int>(rng.below(6)));
    const Scalar t(1, static_cast<long>(1 + rng.below(24)));
    const Scalar gamma(20 + static_cast<long>(rng.below(30)));
    const auto h = PLMap(apply_homotopy(f, t, gamma));
    for (const auto& cell : partition(t).cells) {
      ASSERT_EQ(h.eval(cell.lo()), f(cell.lo()));
      ASSERT_EQ(h.eval(cell.hi()), f(cell.hi()));
    }
    ASSERT_GE(h.slope_floor(), gamma);
  }
}

TEST(LocalDelta, Examples) {
  auto d = local_delta(CurveMap::identity(), S("28/100"));
  EXPECT_EQ(d.radius, S("1/100"));
  EXPECT_EQ(d.step, S("1/128"));
  d = local_delta(CurveMap::constant(S("1/3")), S("28/100"));
  EXPECT_EQ(d.step, S("1/128"));
  d = local_delta(testing::sawtooth3_map(), S("28/100"));
  // 3t < 1/100 first holds at t = 1/512.
  EXPECT_EQ(d.step, S("1/512"));
  EXPECT_THROW(local_delta(CurveMap::identity(), Scalar(0)), ParameterError);

  const auto g = CurveMap::identity();
  const auto h = apply_homotopy(g, S("1/128"));
  EXPECT_LE(sup_distance(g, h), S("9/128"));
  EXPECT_LT(sup_distance(g, h), S("27/100"));
}

// Perturbations g of f inside the radius stay within 27 radii of their deformation.
TEST(LocalDelta, BoundHoldsForNearbyMaps) {
  testing::Rng rng(35);
  const Scalar eps = S("28/100");
  for (int trial = 0; trial < 6; ++trial) {
    const auto f = rng.pl_map(1 + static_cast<int>(rng.below(4)), 16, 8);
    const auto d = local_delta(f, eps);
    for (int k = 0; k < 3; ++k) {
      // Move values at a few dyadic knots by less than the radius, then clip to [0,1].
      std::vector<Vertex> v;
      for (int i = 0; i <= 16; ++i) {
        const Scalar x(i, 16);
        const Scalar bump = d.radius * Scalar(static_cast<long>(rng.below(9)) - 4, 5);
        v.push_back({x, min(Scalar(1), max(Scalar(0), f(x) + bump))});
      }
      const auto g = CurveMap::from_vertices(v);
      if (!(sup_distance(f, g) < d.radius)) continue;
      for (int gamma : {20, 30}) {
        const auto h = apply_homotopy(g, d.step, Scalar(gamma));
        ASSERT_LT(sup_distance(g, h), Scalar(27) * d.radius);
      }
    }
  }
}

TEST(FamilyBounds, Examples) {
  const auto fb = family_box_bounds({CurveMap::identity(), CurveMap::from_vertices(std::vector<Vertex>{{0, 1}, {1, 0}})}, Scalar(1));
  EXPECT_EQ(fb.bound(0, Scalar(1)), Interval::unit());
  EXPECT_EQ(fb.step(), S("1/16"));
  EXPECT_THROW(family_box_bounds({}, Scalar(1)), ParameterError);

  const auto single = family_box_bounds({testing::sawtooth3_map()}, S("1/10"));
  const auto twice = family_box_bounds({testing::sawtooth3_map(), testing::sawtooth3_map()}, S("1/10"));
  EXPECT_EQ(single.step(), twice.step());
  EXPECT_EQ(single.bounds(single.step()), twice.bounds(twice.step()));
  for (const auto& b : single.bounds(single.step())) EXPECT_LE(b.length(), S("1/10"));
}

TEST(FamilyBounds, HeightsStayWithinDiameterPlusEpsilon) {
  testing::Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CurveMap> family;
    const int size = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < size; ++i) family.push_back(rng.curve_map(1 + static_cast<int>(rng.below(4)), 16, 8));
    Scalar diam(0);
    for (const auto& a : family)
      for (const auto& b : family) diam = max(diam, sup_distance(a, b));
    const Scalar eps = S("1/10");
    const auto fb = family_box_bounds(family, eps);
    EXPECT_LT(max(fb.step(), family_modulus(family, fb.step())), eps / Scalar(10));
    for (const auto& t : {fb.step(), fb.step() / Scalar(2)})
      for (const auto& b : fb.bounds(t)) ASSERT_LE(b.length(), diam + eps);
  }
}

TEST(Sdap, SeparatesCopiesOfTheIdentity) {
  const std::vector<std::pair<CurveMap, Scalar>> fam(3, {CurveMap::identity(), Scalar(1)});
  const auto out = sdap_discretize(fam);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(PLMap(out[j]).slope_floor(), Scalar(21 + static_cast<long>(j)));
    EXPECT_EQ(amplitude(out[j], Interval::unit()), Scalar(1));
    for (std::size_t k = j + 1; k < 3; ++k) EXPECT_GT(sup_distance(out[j], out[k]), Scalar(0));
  }
  const std::vector<std::pair<CurveMap, Scalar>> one{{testing::sawtooth3_map(), S("1/4")}};
  EXPECT_EQ(sdap_discretize(one).front(), apply_homotopy(testing::sawtooth3_map(), S("1/4"), Scalar(21)));
}

TEST(Amplitude, Examples) {
  EXPECT_EQ(amplitude(CurveMap::identity(), I("0", "1/4")), S("1/4"));
  EXPECT_EQ(amplitude(CurveMap::constant(S("2/3")), I("1/5", "4/5")), Scalar(0));
  const auto fig = build_box_map(Interval::unit(), BoxParams{S("3/20"), S("1/10"), 0, S("1/5"), 20}).to_map();
  EXPECT_EQ(amplitude(fig, Interval::unit()), S("1/5"));
}

// Along f + k(g - f) with k -> 0 the deformed maps approach each other.
TEST(Homotopy, DeformationVariesContinuouslyAlongAPath) {
  testing::Rng rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = rng.pl_map(4, 16, 8);
    const auto g = rng.pl_map(4, 16, 8);
    const Scalar t = S("1/7");
    const auto hf = apply_homotopy(f, t);
    Scalar previous(2);
    for (int k = 1; k <= 12; ++k) {
      const Scalar w = dyadic(static_cast<unsigned>(k));
      const Scalar ws[] = {Scalar(1) - w, w};
      const CurveMap ms[] = {f, g};
      const auto fk = affine_combination(ws, ms);
      const Scalar d = sup_distance(hf, apply_homotopy(fk, t));
      EXPECT_LE(d, previous) << "k=" << k;
      previous = d;
    }
    EXPECT_LT(previous, S("1/20"));
  }
}

}  // namespace
}  // namespace tmap
