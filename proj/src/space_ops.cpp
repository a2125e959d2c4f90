#include "tmap/space_ops.hpp"

#include "tmap/errors.hpp"

namespace tmap {
namespace {

// Some x in p's domain with p(x) = y, given that y lies in p's range there.
Scalar preimage_in(const Piece& p, const Scalar& y) {
  const Scalar& lo = p.domain().lo();
  const Scalar& hi = p.domain().hi();
  if (p.at(lo) == y) return lo;
  if (p.at(hi) == y) return hi;
  if (auto v = p.vertex(); v && lo < *v && *v < hi && p.at(*v) == y) return *v;
  // Only extreme values are requested, and those sit at endpoints or the vertex.
  throw InternalError("value " + y.str() + " is not an extreme value of the piece");
}

}  // namespace

std::optional<SurjectionWitness> surjection_witness(const CurveMap& f) {
  if (!f.range_on(Interval::unit()).is_unit()) return std::nullopt;
  std::optional<Scalar> zero, one;
  for (const auto& p : f.pieces()) {
    const Interval r = f.range_on(p.domain());
    if (!zero && r.lo().is_zero()) zero = preimage_in(p, Scalar(0));
    if (!one && r.hi() == Scalar(1)) one = preimage_in(p, Scalar(1));
  }
  return SurjectionWitness{*zero, *one};
}

bool is_surjective(const CurveMap& f) { return f.range_on(Interval::unit()).is_unit(); }

Normalized normalize_to_surjection(const CurveMap& f) {
  const Interval r = f.range_on(Interval::unit());
  if (r.degenerate()) throw DomainError("a constant map cannot be normalized");
  const Scalar scale = Scalar(1) / r.length();
  std::vector<Piece> pieces;
  pieces.reserve(f.size());
  for (const auto& p : f.pieces())
    pieces.emplace_back(p.domain(), (p.c0() - r.lo()) * scale, p.c1() * scale, p.c2() * scale);
  return {r.lo(), r.hi(), CurveMap::from_pieces(std::move(pieces))};
}

CurveMap square_map() { return CurveMap::from_pieces({Piece(Interval::unit(), 0, 0, 1)}); }

PLMap sawtooth3() {
  const Vertex v[] = {{0, 0}, {Scalar(1, 3), 1}, {Scalar(2, 3), 0}, {1, 1}};
  return PLMap::from_vertices(v);
}

CurveMap reflect_values(const CurveMap& f) {
  std::vector<Piece> pieces;
  pieces.reserve(f.size());
  for (const auto& p : f.pieces()) pieces.emplace_back(p.domain(), Scalar(1) - p.c0(), -p.c1(), -p.c2());
  return CurveMap::from_pieces(std::move(pieces));
}

PLMap ruette_family(int n) {
  if (n < 5) throw ParameterError("ruette_family needs n >= 5");
  const Scalar cell(1, n);
  const Scalar leg = cell / Scalar(5);  // width of a leg of height 1/n at slope 5
  std::vector<Vertex> v{{0, 0}};
  auto to = [&](const Scalar& width, Scalar y) { v.push_back({v.back().x + width, std::move(y)}); };
  // First cell: up to 2/n, down to 0, up to 1/n.
  to(Scalar(2) * leg, Scalar(2) * cell);
  to(Scalar(2) * leg, Scalar(0));
  to(leg, cell);
  for (int k = 1; k + 1 < n; ++k) {
    to(leg, Scalar(k - 1) * cell);
    to(Scalar(3) * leg, Scalar(k + 2) * cell);
    to(leg, Scalar(k + 1) * cell);
  }
  // Last cell: up to 1, down to (n-2)/n, up to 1.
  to(leg, Scalar(1));
  to(Scalar(2) * leg, Scalar(n - 2) * cell);
  to(Scalar(2) * leg, Scalar(1));
  return PLMap::from_vertices(v);
}

namespace {

std::optional<Scalar> fixed_point_of(const Piece& p) {
  const Interval& d = p.domain();
  if (p.c1() == Scalar(1)) {
    if (p.c0().is_zero()) return d.midpoint();
    return std::nullopt;
  }
  Scalar x = p.c0() / (Scalar(1) - p.c1());
  if (d.contains(x)) return x;
  return std::nullopt;
}

// Pieces of f restricted to [lo, hi].
void copy_pieces(const CurveMap& f, const Scalar& lo, const Scalar& hi, std::vector<Piece>& out) {
  if (!(lo < hi)) return;
  for (const auto& p : f.pieces()) {
    const Scalar& a = max(p.domain().lo(), lo);
    const Scalar& b = min(p.domain().hi(), hi);
    if (a < b) out.emplace_back(Interval(a, b), p.c0(), p.c1(), p.c2());
  }
}

// Affine piece through (x0, y0) and (x1, y1).
Piece segment(const Scalar& x0, const Scalar& y0, const Scalar& x1, const Scalar& y1) {
  const Scalar slope = (y1 - y0) / (x1 - x0);
  return {Interval(x0, x1), y0 - slope * x0, slope};
}

CurveMap perturb_at(const CurveMap& g, const Scalar& x0, const Scalar& r) {
  std::vector<Piece> pieces;
  const Scalar half = r / Scalar(2);
  if (x0.is_zero()) {
    // (2/r) x^2 on [0, r/2], then a connector to g(r).
    pieces.emplace_back(Interval(0, half), 0, 0, Scalar(2) / r);
    pieces.push_back(segment(half, half, r, g.eval(r)));
    copy_pieces(g, r, Scalar(1), pieces);
  } else {
    // (x - a)^2 / r + a on [a, a + r] with a = x0 - r/2.
    const Scalar a = x0 - half;
    const Scalar b = x0 + half;
    const Scalar inv = Scalar(1) / r;
    copy_pieces(g, Scalar(0), x0 - r, pieces);
    pieces.push_back(segment(x0 - r, g.eval(x0 - r), a, a));
    pieces.emplace_back(Interval(a, b), a * a * inv + a, -Scalar(2) * a * inv, inv);
    pieces.push_back(segment(b, b, x0 + r, g.eval(x0 + r)));
    copy_pieces(g, x0 + r, Scalar(1), pieces);
  }
  return CurveMap::from_pieces(std::move(pieces));
}

}  // namespace

Perturbation nowhere_dense_perturbation(const PLMap& g, const Scalar& epsilon, const Budget& budget) {
  if (epsilon.sign() <= 0) throw ParameterError("epsilon must be positive");
  const CurveMap& gm = g.map();
  if (!is_surjective(gm)) throw ParameterError("nowhere_dense_perturbation needs a surjective map");

  std::optional<Scalar> x0;
  for (const auto& p : gm.pieces()) {
    auto x = fixed_point_of(p);
    if (x && x->sign() > 0 && *x < Scalar(1)) {
      x0 = x;
      break;
    }
  }
  // A surjection without interior fixed points lies above the diagonal on (0,1)
  // or below it; only the latter can reach 0 and 1, and then it fixes 0.
  if (!x0 && gm.eval(Scalar(0)).is_zero()) x0 = Scalar(0);
  if (!x0) throw InternalError("surjective map without a usable fixed point");

  const Scalar quarter = epsilon / Scalar(4);
  Scalar bound = min(quarter, Scalar(1) - *x0);
  if (x0->sign() > 0) bound = min(bound, *x0);
  Scalar r = largest_dyadic_below(bound);
  auto near = [&](const Scalar& r) {
    const Interval window(max(Scalar(0), *x0 - r), *x0 + r);
    const Interval img = gm.range_on(window);
    return *x0 - quarter < img.lo() && img.hi() < *x0 + quarter;
  };
  for (int attempt = 0; attempt < 64; ++attempt, r /= Scalar(2)) {
    if (!near(r)) continue;
    CurveMap h = perturb_at(gm, *x0, r);
    if (!(sup_distance(gm, h) < epsilon) || !is_surjective(h)) continue;
    Verdict verdict = is_transitive_pipeline(h, budget);
    if (verdict.kind != Verdict::Kind::Refuted) continue;
    const Scalar half = r / Scalar(2);
    Interval trap = x0->is_zero() ? Interval(0, half) : Interval(*x0 - half, *x0 + half);
    const Scalar ball_radius = r / Scalar(4);
    auto ball = ball_refute(h, ball_radius, budget.grid_level);
    return {std::move(h), *x0, r, std::move(trap), std::move(verdict), std::move(ball), ball_radius};
  }
  throw InternalError("no admissible perturbation radius found");
}

NonconvexityWitness nonconvexity_witness() {
  PLMap f = sawtooth3();
  PLMap g(reflect_values(f.map()));
  const Scalar w[] = {Scalar(1, 2), Scalar(1, 2)};
  const CurveMap ms[] = {f.map(), g.map()};
  CurveMap avg = affine_combination(w, ms);
  return {std::move(f), std::move(g), std::move(avg)};
}

}  // namespace tmap
