#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tmap/space_ops.hpp"

namespace tmap {
namespace {

using testing::I;
using testing::S;
using Kind = Verdict::Kind;

TEST(Surjectivity, Examples) {
  EXPECT_TRUE(is_surjective(CurveMap::identity()));
  EXPECT_TRUE(is_surjective(square_map()));
  EXPECT_FALSE(is_surjective(CurveMap::constant(S("1/2"))));
  const auto w = surjection_witness(square_map());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->zero_at, Scalar(0));
  EXPECT_EQ(w->one_at, Scalar(1));
  // Logistic map reaches 1 at its vertex.
  const auto logistic = CurveMap::from_pieces({Piece(Interval::unit(), 0, 4, -4)});
  EXPECT_EQ(surjection_witness(logistic)->one_at, S("1/2"));
  EXPECT_FALSE(surjection_witness(CurveMap::constant(S("1/2"))));
}

TEST(Normalize, Examples) {
  auto n = normalize_to_surjection(square_map());
  EXPECT_EQ(n.low, Scalar(0));
  EXPECT_EQ(n.high, Scalar(1));
  EXPECT_EQ(n.map, square_map());
  const auto half = CurveMap::from_pieces({Piece(Interval::unit(), S("1/4"), S("1/2"))});
  n = normalize_to_surjection(half);
  EXPECT_EQ(n.low, S("1/4"));
  EXPECT_EQ(n.high, S("3/4"));
  EXPECT_EQ(n.map, CurveMap::identity());
  EXPECT_THROW(normalize_to_surjection(CurveMap::constant(S("1/5"))), DomainError);
}

TEST(Normalize, RoundTrip) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = rng.curve_map(1 + static_cast<int>(rng.below(5)));
    if (range_on(f, Interval::unit()).degenerate()) continue;
    const auto n = normalize_to_surjection(f);
    const auto w = surjection_witness(n.map);
    ASSERT_TRUE(w);
    EXPECT_EQ(n.map(w->zero_at), Scalar(0));
    EXPECT_EQ(n.map(w->one_at), Scalar(1));
    EXPECT_EQ(f(w->zero_at), n.low);
    EXPECT_EQ(f(w->one_at), n.high);
    ASSERT_EQ(n.map.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(n.map.pieces()[i].affine(), f.pieces()[i].affine());
  }
}

TEST(Ruette, Shape) {
  const auto f = ruette_family(5);
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(f.eval(Scalar(k, 5)), Scalar(k, 5));
  for (const auto& p : f.map().pieces()) EXPECT_EQ(abs(p.c1()), Scalar(5));
  // Fifteen legs, two pairs of which are collinear across cell boundaries.
  EXPECT_EQ(f.map().size(), 13u);
  EXPECT_THROW(ruette_family(4), ParameterError);
}

TEST(Ruette, CellsCoverTheirNeighbours) {
  for (int n = 5; n <= 12; ++n) {
    const auto f = ruette_family(n);
    for (int k = 0; k < n; ++k) {
      const Interval cell(Scalar(k, n), Scalar(k + 1, n));
      const Interval target(max(Scalar(0), Scalar(k - 1, n)), min(Scalar(1), Scalar(k + 2, n)));
      EXPECT_EQ(range_on(f.map(), cell), target) << "n=" << n << " k=" << k;
    }
    EXPECT_EQ(static_cast<int>(f.map().size()), 2 * n + 3);
  }
}

TEST(Ruette, ConvergesToIdentity) {
  Scalar previous(1);
  for (int n = 5; n <= 50; ++n) {
    const Scalar d = sup_distance(ruette_family(n).map(), CurveMap::identity());
    EXPECT_LE(d, Scalar(3, n));
    EXPECT_EQ(d, Scalar(8, 5 * n));
    EXPECT_LT(d, previous);
    previous = d;
  }
}

TEST(Perturbation, SawtoothInstance) {
  const PLMap g = sawtooth3();
  const auto p = nowhere_dense_perturbation(g, S("1/10"));
  EXPECT_EQ(p.fixed_point, S("1/2"));
  EXPECT_EQ(p.radius, S("1/128"));
  EXPECT_EQ(p.trap, I("127/256", "129/256"));
  const CurveMap& h = p.map;
  const Piece& q = h.pieces()[h.locate(S("1/2"))];
  EXPECT_EQ(q.domain(), I("127/256", "129/256"));
  EXPECT_FALSE(q.affine());
  EXPECT_EQ(h(S("127/256")), S("127/256"));
  EXPECT_EQ(h(S("129/256")), S("129/256"));
  EXPECT_EQ(range_on(h, p.trap), p.trap);
  // h(x) <= x on the trap: h(x) - x = u^2/r - u with u = x - 127/256.
  for (int k = 0; k <= 64; ++k) {
    const Scalar x = p.trap.lo() + p.trap.length() * Scalar(k, 64);
    if (k == 0 || k == 64) EXPECT_EQ(h(x), x);
    else EXPECT_LT(h(x), x);
  }
  EXPECT_LT(sup_distance(g.map(), h), S("1/10"));
  EXPECT_TRUE(is_surjective(h));
  EXPECT_EQ(p.verdict.kind, Kind::Refuted);
  EXPECT_TRUE(p.verdict.witness.contains(image_set(h, p.verdict.witness)));
  // Outside the modified window the representation is unchanged.
  for (const auto& piece : h.pieces()) {
    const auto& d = piece.domain();
    if (d.hi() <= S("63/128") || d.lo() >= S("65/128")) {
      const Piece& orig = g.map().pieces()[g.map().locate(d.midpoint())];
      EXPECT_TRUE(piece.same_polynomial(orig));
    }
  }
}

// Without interior fixed points a surjection fixes 0, and the trap sits at the left end.
TEST(Perturbation, EndpointFixedPoint) {
  for (const auto& v : {std::vector<Vertex>{{0, 0}, {S("1/4"), 1}, {1, 1}},
                        std::vector<Vertex>{{0, 0}, {S("3/4"), 0}, {1, 1}}}) {
    const auto g = PLMap::from_vertices(v);
    const auto p = nowhere_dense_perturbation(g, S("1/5"));
    EXPECT_EQ(p.fixed_point, Scalar(0));
    EXPECT_EQ(p.trap, Interval(0, p.radius / Scalar(2)));
    EXPECT_EQ(range_on(p.map, p.trap), p.trap);
    EXPECT_LT(sup_distance(g.map(), p.map), S("1/5"));
    EXPECT_TRUE(is_surjective(p.map));
    EXPECT_EQ(p.verdict.kind, Kind::Refuted);
  }
}

TEST(Perturbation, RejectsBadInput) {
  EXPECT_THROW(nowhere_dense_perturbation(sawtooth3(), Scalar(0)), ParameterError);
  EXPECT_THROW(nowhere_dense_perturbation(PLMap(CurveMap::constant(S("1/2"))), S("1/10")), ParameterError);
}

TEST(Nonconvexity, Witness) {
  const auto w = nonconvexity_witness();
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(w.average(Scalar(k, 20)), S("1/2"));
  EXPECT_FALSE(is_surjective(w.average));
  EXPECT_EQ(is_transitive_pipeline(w.first.map()).kind, Kind::Certified);
  EXPECT_EQ(is_transitive_pipeline(w.second.map()).kind, Kind::Certified);
  const auto ball = ball_refute(w.average, S("1/8"), 6);
  ASSERT_TRUE(ball);
  EXPECT_GT(ball->margin, Scalar(0));
  EXPECT_EQ(ball_margin(w.average, I("1/4", "3/4"), S("1/8")), S("1/8"));
}

}  // namespace
}  // namespace tmap
