#include <gtest/gtest.h>

#include <queue>

#include "support/fixtures.hpp"
#include "tmap/homotopy.hpp"
#include "tmap/space_ops.hpp"
#include "tmap/transitivity.hpp"

namespace tmap {
namespace {

using testing::I;
using testing::S;
using Kind = Verdict::Kind;

TEST(Reach, Examples) {
  EXPECT_FALSE(reach_check(CurveMap::identity(), I("0", "1/4"), I("1/2", "3/4"), 3));
  EXPECT_TRUE(reach_check(sawtooth3().map(), I("0", "1/10"), I("1/2", "1"), 2));
  EXPECT_FALSE(reach_check(sawtooth3().map(), I("0", "1/10"), I("1/2", "1"), 1));
  EXPECT_FALSE(reach_check(square_map(), I("0", "1/3"), I("1/2", "1"), 10));
  EXPECT_THROW(reach_check(square_map(), I("0", "1/3"), I("1/2", "1"), 0), ParameterError);
  EXPECT_THROW(reach_check(square_map(), I("1/3", "1/3"), I("1/2", "1"), 1), DomainError);
}

// Exact n-fold composite of a PL map, for cross-checking iterated images.
PLMap power(const PLMap& f, int n) {
  PLMap out = f;
  for (int i = 1; i < n; ++i) out = compose_pl(out, f);
  return out;
}

TEST(Reach, AgreesWithSamplingAndComposition) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const PLMap f(rng.pl_map(1 + static_cast<int>(rng.below(5)), 32, 32));
    const Interval u = rng.interval(16), v = rng.interval(16);
    const int n = 1 + static_cast<int>(rng.below(3));
    const bool exact = reach_check(f.map(), u, v, n);
    bool sampled = false;
    constexpr int kPoints = 1000;
    for (int k = 0; k <= kPoints && !sampled; ++k) {
      Scalar x = u.lo() + u.length() * Scalar(k, kPoints);
      for (int i = 0; i < n; ++i) x = f.eval(x);
      sampled = v.contains(x);
    }
    if (sampled) EXPECT_TRUE(exact);
    EXPECT_EQ(exact, range_on(power(f, n).map(), u).intersects(v));
  }
}

TEST(Leo, Examples) {
  EXPECT_EQ(leo_certify(sawtooth3(), 3, 10).kind, Kind::Certified);
  EXPECT_EQ(leo_certify(ruette_family(5), 6, 64).kind, Kind::Certified);
  EXPECT_THROW(leo_certify(PLMap(CurveMap::identity()), 3, 10), PreconditionError);
  EXPECT_THROW(leo_certify(sawtooth3(), 0, 10), ParameterError);
  // The budget is honoured: a dyadic eighth needs two steps under the sawtooth.
  EXPECT_EQ(leo_certify(sawtooth3(), 3, 1), Verdict::inconclusive(1));
}

// A full-branch map whose cells all cover [0,1] has an irreducible transition graph.
TEST(Leo, SawtoothEighthsCoverWithinThreeSteps) {
  const PLMap f3 = power(sawtooth3(), 3);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(range_on(f3.map(), Interval(Scalar(k, 8), Scalar(k + 1, 8))), Interval::unit());
}

// Strong connectivity of the transition graph on the cells of a grid fine
// enough that every cell is a monotone lap mapped onto a union of cells.
bool markov_irreducible(const PLMap& f, long cells) {
  std::vector<std::vector<long>> next(static_cast<std::size_t>(cells));
  for (long j = 0; j < cells; ++j) {
    const Scalar a = f.eval(Scalar(j, cells)), b = f.eval(Scalar(j + 1, cells));
    const Scalar lo = min(a, b) * Scalar(cells), hi = max(a, b) * Scalar(cells);
    EXPECT_TRUE(lo.is_integer() && hi.is_integer());
    for (long m = lo.floor().get_si(); m < hi.floor().get_si(); ++m) next[static_cast<std::size_t>(j)].push_back(m);
  }
  auto reaches_all = [&](const std::vector<std::vector<long>>& g) {
    std::vector<bool> seen(g.size());
    std::queue<long> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
      const long u = q.front();
      q.pop();
      for (long w : g[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) seen[static_cast<std::size_t>(w)] = true, q.push(w);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
  };
  std::vector<std::vector<long>> back(next.size());
  for (std::size_t u = 0; u < next.size(); ++u)
    for (long w : next[u]) back[static_cast<std::size_t>(w)].push_back(static_cast<long>(u));
  return reaches_all(next) && reaches_all(back);
}

TEST(Leo, RuetteMapsAgreeWithMarkovGraph) {
  for (int n = 5; n <= 9; ++n) {
    const PLMap f = ruette_family(n);
    EXPECT_TRUE(markov_irreducible(f, 5L * n)) << n;
    EXPECT_EQ(leo_certify(f, 6, 64).kind, Kind::Certified) << n;
  }
}

TEST(Refute, Examples) {
  auto v = invariant_region_refute(CurveMap::identity(), 1, 10);
  EXPECT_EQ(v, Verdict::refuted(IntervalSet(I("0", "1/2"))));
  v = invariant_region_refute(square_map(), 2, 10);
  EXPECT_EQ(v, Verdict::refuted(IntervalSet(I("0", "1/4"))));
  for (int level = 1; level <= 6; ++level)
    EXPECT_EQ(invariant_region_refute(sawtooth3().map(), level, 100), Verdict::inconclusive(100));
  v = invariant_region_refute(CurveMap::constant(S("1/3")), 6, 64);
  ASSERT_EQ(v.kind, Kind::Refuted);
  EXPECT_TRUE(v.witness.contains(S("1/3")));
}

TEST(Ball, Examples) {
  EXPECT_EQ(ball_margin(square_map(), I("0", "1/3"), S("1/100")), S("191/900"));
  const auto w = ball_refute(square_map(), S("1/100"), 6);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->region, I("0", "1/2"));
  EXPECT_EQ(w->margin, S("6/25"));
  EXPECT_FALSE(ball_refute(CurveMap::identity(), S("1/100"), 6));
  EXPECT_FALSE(ball_refute(CurveMap::identity(), S("1/1000000"), 6));
  EXPECT_FALSE(ball_refute(sawtooth3().map(), S("1/100"), 6));
  EXPECT_THROW(ball_refute(square_map(), Scalar(0), 6), ParameterError);
  EXPECT_THROW(ball_margin(square_map(), Interval::unit(), S("1/100")), DomainError);
}

// Every map within rho of f keeps the ball witness invariant.
TEST(Ball, WitnessHoldsForPerturbations) {
  testing::Rng rng(42);
  const Scalar rho = S("1/100");
  const auto w = ball_refute(square_map(), rho, 6);
  ASSERT_TRUE(w);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vertex> v;
    for (int i = 0; i <= 16; ++i) {
      const Scalar x(i, 16);
      const Scalar y = x * x + rho * Scalar(static_cast<long>(rng.below(5)) - 2, 2);
      v.push_back({x, min(Scalar(1), max(Scalar(0), y))});
    }
    // Interpolating x^2 adds at most 1/1024 on top of the perturbation, so shrink it.
    const auto g = CurveMap::from_vertices(v);
    if (!(sup_distance(g, square_map()) <= rho)) continue;
    EXPECT_TRUE(w->region.contains(range_on(g, w->region)));
  }
}

TEST(Pipeline, Examples) {
  EXPECT_EQ(is_transitive_pipeline(ruette_family(7).map()).kind, Kind::Certified);
  EXPECT_EQ(is_transitive_pipeline(square_map()).kind, Kind::Refuted);
  EXPECT_EQ(is_transitive_pipeline(CurveMap::constant(S("1/2"))).kind, Kind::Refuted);
  EXPECT_EQ(is_transitive_pipeline(CurveMap::identity()).kind, Kind::Refuted);
  EXPECT_EQ(is_transitive_pipeline(sawtooth3().map()).kind, Kind::Certified);
}

TEST(Pipeline, CertificatesNeverConflict) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    CurveMap f = rng.pl_map(1 + static_cast<int>(rng.below(6)), 32, 16);
    if (trial % 4 == 0) f = apply_homotopy(f, Scalar(1, static_cast<long>(2 + rng.below(3))));
    const Verdict refute = invariant_region_refute(f, 4, 32);
    if (refute.kind == Kind::Refuted) {
      EXPECT_TRUE(refute.witness.contains(image_set(f, refute.witness)));
      EXPECT_FALSE(refute.witness.is_unit());
      EXPECT_TRUE(refute.witness.has_interior());
    }
    const PLMap g(f);
    if (Scalar(2) < g.slope_floor()) {
      const Verdict leo = leo_certify(g, 4, 32);
      EXPECT_FALSE(leo.kind == Kind::Certified && refute.kind == Kind::Refuted) << "trial " << trial;
      if (leo.kind == Kind::Certified) {
        for (int a = 0; a < 16; ++a)
          for (int b = 0; b < 16; ++b) {
            const Interval u(Scalar(a, 16), Scalar(a + 1, 16)), v(Scalar(b, 16), Scalar(b + 1, 16));
            bool hit = false;
            for (int n = 1; n <= 32 && !hit; ++n) hit = reach_check(f, u, v, n);
            ASSERT_TRUE(hit);
          }
      }
    }
  }
}

}  // namespace
}  // namespace tmap
