#include "tmap/curve_map.hpp"

#include <algorithm>
#include <limits>

#include "tmap/errors.hpp"

namespace tmap {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Union of sorted breakpoint lists, duplicates removed.
std::vector<Scalar> merge_cuts(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Piece

Piece::Piece(Interval domain, Scalar c0, Scalar c1, Scalar c2)
    : domain_(std::move(domain)), c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

Scalar Piece::at(const Scalar& x) const {
  if (c2_.is_zero()) return c0_ + c1_ * x;
  return c0_ + x * (c1_ + c2_ * x);
}

std::optional<Scalar> Piece::vertex() const {
  if (c2_.is_zero()) return std::nullopt;
  return -c1_ / (Scalar(2) * c2_);
}

Interval Piece::range_on(const Interval& sub) const {
  Scalar a = at(sub.lo());
  Scalar b = at(sub.hi());
  if (b < a) std::swap(a, b);
  if (auto v = vertex(); v && sub.lo() < *v && *v < sub.hi()) {
    Scalar m = at(*v);
    if (m < a) a = m;
    if (b < m) b = m;
  }
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// CurveMap

std::shared_ptr<const CurveMap::Data> CurveMap::index(std::vector<Piece> pieces) {
  std::vector<Interval> ranges;
  ranges.reserve(pieces.size());
  for (const auto& p : pieces) ranges.push_back(p.range_on(p.domain()));
  return index(std::move(pieces), std::move(ranges));
}

std::shared_ptr<const CurveMap::Data> CurveMap::index(std::vector<Piece> pieces, std::vector<Interval> ranges) {
  auto d = std::make_shared<Data>();
  d->pieces = std::move(pieces);
  d->ranges = std::move(ranges);
  const std::size_t n = d->pieces.size();

  std::size_t leaves = 1;
  while (leaves < n) leaves <<= 1;
  d->leaves = leaves;
  d->arg_min.assign(2 * leaves, kNone);
  d->arg_max.assign(2 * leaves, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    d->arg_min[leaves + i] = static_cast<std::uint32_t>(i);
    d->arg_max[leaves + i] = static_cast<std::uint32_t>(i);
  }
  const auto& r = d->ranges;
  for (std::size_t k = leaves - 1; k >= 1; --k) {
    auto l = d->arg_min[2 * k], rr = d->arg_min[2 * k + 1];
    d->arg_min[k] = (rr == kNone || (l != kNone && !(r[rr].lo() < r[l].lo()))) ? l : rr;
    l = d->arg_max[2 * k];
    rr = d->arg_max[2 * k + 1];
    d->arg_max[k] = (rr == kNone || (l != kNone && !(r[l].hi() < r[rr].hi()))) ? l : rr;
  }
  return d;
}

CurveMap CurveMap::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty()) throw DomainError("a map needs at least one piece");
  if (!pieces.front().domain().lo().is_zero() || pieces.back().domain().hi() != Scalar(1))
    throw DomainError("piece domains must start at 0 and end at 1");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.domain().degenerate())
      throw DomainError("zero-length piece at x=" + p.domain().lo().str());
    if (i + 1 < pieces.size()) {
      const auto& q = pieces[i + 1];
      if (p.domain().hi() != q.domain().lo())
        throw DomainError("piece domains do not tile [0,1] at x=" + p.domain().hi().str());
      if (p.at(p.domain().hi()) != q.at(q.domain().lo()))
        throw DomainError("map is discontinuous at x=" + p.domain().hi().str());
    }
    Scalar a = p.at(p.domain().lo()), b = p.at(p.domain().hi());
    if (auto v = p.vertex(); v && p.domain().lo() < *v && *v < p.domain().hi()) {
      Scalar m = p.at(*v);
      a = min(a, m);
      b = max(b, m);
    }
    if (min(a, b).sign() < 0 || Scalar(1) < max(a, b))
      throw DomainError("piece on [" + p.domain().lo().str() + ", " + p.domain().hi().str() +
                        "] leaves [0,1]");
  }
  std::vector<Piece> merged;
  merged.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!merged.empty() && merged.back().same_polynomial(p)) {
      const auto& b = merged.back();
      merged.back() = Piece(Interval(b.domain().lo(), p.domain().hi()), b.c0(), b.c1(), b.c2());
    } else {
      merged.push_back(std::move(p));
    }
  }
  return CurveMap(index(std::move(merged)));
}

CurveMap CurveMap::from_vertices(std::span<const Vertex> v) {
  if (v.size() < 2) throw DomainError("a piecewise linear map needs at least two vertices");
  if (!v.front().x.is_zero() || v.back().x != Scalar(1)) throw DomainError("vertices must span [0,1]");
  // Continuity holds by construction and the piece ranges are the endpoint values,
  // so only the vertices themselves need checking.
  std::vector<Piece> pieces;
  std::vector<Interval> ranges;
  pieces.reserve(v.size() - 1);
  ranges.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].y.sign() < 0 || Scalar(1) < v[i].y) throw DomainError("vertex value " + v[i].y.str() + " leaves [0,1]");
    if (i + 1 == v.size()) break;
    if (!(v[i].x < v[i + 1].x)) throw DomainError("vertex abscissae must increase strictly");
    Scalar slope = (v[i + 1].y - v[i].y) / (v[i + 1].x - v[i].x);
    if (!pieces.empty() && pieces.back().c1() == slope) {
      Piece& last = pieces.back();
      last = Piece(Interval(last.domain().lo(), v[i + 1].x), last.c0(), std::move(slope));
      ranges.back() = ranges.back().hull(Interval::point(v[i + 1].y));
      continue;
    }
    Scalar c0 = v[i].y - slope * v[i].x;
    pieces.emplace_back(Interval(v[i].x, v[i + 1].x), std::move(c0), std::move(slope));
    ranges.emplace_back(min(v[i].y, v[i + 1].y), max(v[i].y, v[i + 1].y));
  }
  return CurveMap(index(std::move(pieces), std::move(ranges)));
}

CurveMap CurveMap::identity() { return from_pieces({Piece(Interval::unit(), 0, 1)}); }

CurveMap CurveMap::constant(const Scalar& c) { return from_pieces({Piece(Interval::unit(), c, 0)}); }

std::vector<Scalar> CurveMap::breakpoints() const {
  std::vector<Scalar> out;
  out.reserve(size() + 1);
  out.push_back(Scalar(0));
  for (const auto& p : pieces()) out.push_back(p.domain().hi());
  return out;
}

bool CurveMap::is_pl() const {
  return std::all_of(pieces().begin(), pieces().end(), [](const Piece& p) { return p.affine(); });
}

std::size_t CurveMap::locate(const Scalar& x) const {
  const auto& ps = data_->pieces;
  auto it = std::upper_bound(ps.begin(), ps.end(), x,
                             [](const Scalar& v, const Piece& p) { return v < p.domain().hi(); });
  if (it == ps.end()) return ps.size() - 1;
  return static_cast<std::size_t>(it - ps.begin());
}

std::size_t CurveMap::locate_left(const Scalar& x) const {
  const auto& ps = data_->pieces;
  auto it = std::lower_bound(ps.begin(), ps.end(), x,
                             [](const Piece& p, const Scalar& v) { return p.domain().hi() < v; });
  if (it == ps.end()) return ps.size() - 1;
  return static_cast<std::size_t>(it - ps.begin());
}

Scalar CurveMap::eval(const Scalar& x) const {
  if (x.sign() < 0 || Scalar(1) < x) throw DomainError("x=" + x.str() + " outside [0,1]");
  return data_->pieces[locate(x)].at(x);
}

Interval CurveMap::range_of_pieces(std::size_t first, std::size_t last) const {
  const auto& r = data_->ranges;
  std::uint32_t best_min = kNone, best_max = kNone;
  auto take = [&](std::size_t node) {
    auto mi = data_->arg_min[node], ma = data_->arg_max[node];
    if (mi != kNone && (best_min == kNone || r[mi].lo() < r[best_min].lo())) best_min = mi;
    if (ma != kNone && (best_max == kNone || r[best_max].hi() < r[ma].hi())) best_max = ma;
  };
  std::size_t lo = first + data_->leaves, hi = last + data_->leaves + 1;
  while (lo < hi) {
    if (lo & 1) take(lo++);
    if (hi & 1) take(--hi);
    lo >>= 1;
    hi >>= 1;
  }
  return {r[best_min].lo(), r[best_max].hi()};
}

Interval CurveMap::range_on(const Interval& j) const {
  const auto& ps = data_->pieces;
  if (j.degenerate()) return Interval::point(ps[locate(j.lo())].at(j.lo()));
  const std::size_t i = locate(j.lo());
  const std::size_t k = locate_left(j.hi());
  if (i == k) return ps[i].range_on(j);
  Interval out = ps[i].range_on(Interval(j.lo(), ps[i].domain().hi()))
                     .hull(ps[k].range_on(Interval(ps[k].domain().lo(), j.hi())));
  if (i + 1 < k) out = out.hull(range_of_pieces(i + 1, k - 1));
  return out;
}

IntervalSet CurveMap::image(const IntervalSet& u) const {
  std::vector<Interval> parts;
  parts.reserve(u.size());
  for (const auto& c : u.components()) parts.push_back(range_on(c));
  return IntervalSet(std::move(parts));
}

// ---------------------------------------------------------------------------
// PLMap

PLMap::PLMap(CurveMap map) : map_(std::move(map)) {
  if (!map_.is_pl()) throw ParameterError("map has a quadratic piece; a piecewise linear map is required");
}

std::vector<Vertex> PLMap::vertices() const {
  std::vector<Vertex> out;
  out.reserve(map_.size() + 1);
  const auto ps = map_.pieces();
  out.push_back({Scalar(0), ps.front().at(Scalar(0))});
  for (const auto& p : ps) out.push_back({p.domain().hi(), p.at(p.domain().hi())});
  return out;
}

Scalar PLMap::slope_floor() const {
  const auto ps = map_.pieces();
  Scalar best = abs(ps.front().c1());
  for (const auto& p : ps) best = min(best, abs(p.c1()));
  return best;
}

// ---------------------------------------------------------------------------
// Free operations

Scalar eval(const CurveMap& f, const Scalar& x) { return f.eval(x); }
Interval range_on(const CurveMap& f, const Interval& j) { return f.range_on(j); }
IntervalSet image_set(const CurveMap& f, const IntervalSet& u) { return f.image(u); }

Scalar sup_distance(const CurveMap& f, const CurveMap& g) { return sup_distance(f, g, Interval::unit()); }

Scalar sup_distance(const CurveMap& f, const CurveMap& g, const Interval& on) {
  const auto fp = f.pieces();
  const auto gp = g.pieces();
  Scalar a = on.lo();
  std::size_t i = f.locate(a), j = g.locate(a);
  Scalar best = abs(fp[i].at(a) - gp[j].at(a));
  while (a < on.hi()) {
    const Scalar& b = min(min(fp[i].domain().hi(), gp[j].domain().hi()), on.hi());
    const Scalar d0 = fp[i].c0() - gp[j].c0();
    const Scalar d1 = fp[i].c1() - gp[j].c1();
    const Scalar d2 = fp[i].c2() - gp[j].c2();
    auto diff = [&](const Scalar& x) { return abs(d0 + x * (d1 + d2 * x)); };
    best = max(best, diff(b));
    if (!d2.is_zero()) {
      Scalar v = -d1 / (Scalar(2) * d2);
      if (a < v && v < b) best = max(best, diff(v));
    }
    Scalar next = b;
    if (fp[i].domain().hi() == next && i + 1 < fp.size()) ++i;
    if (gp[j].domain().hi() == next && j + 1 < gp.size()) ++j;
    a = std::move(next);
  }
  return best;
}

PLMap compose_pl(const PLMap& f, const PLMap& g) {
  const CurveMap& gm = g.map();
  const auto gps = gm.pieces();
  std::vector<Piece> out;
  for (const auto& p : f.map().pieces()) {
    const Scalar& x0 = p.domain().lo();
    const Scalar& x1 = p.domain().hi();
    if (p.c1().is_zero()) {
      out.emplace_back(p.domain(), gm.eval(p.c0()), Scalar(0));
      continue;
    }
    // Split [x0,x1] at preimages of g's breakpoints lying strictly inside f's image of the piece.
    const Scalar y0 = p.at(x0), y1 = p.at(x1);
    const Scalar& ylo = min(y0, y1);
    const Scalar& yhi = max(y0, y1);
    std::vector<Scalar> cuts{x0, x1};
    for (std::size_t k = 0; k + 1 < gps.size(); ++k) {
      const Scalar& b = gps[k].domain().hi();
      if (ylo < b && b < yhi) cuts.push_back((b - p.c0()) / p.c1());
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Scalar mid_y = p.at((cuts[k] + cuts[k + 1]) / Scalar(2));
      const Piece& q = gps[gm.locate(mid_y)];
      // q(p(x)) = q.c0 + q.c1 * (p.c0 + p.c1 x)
      out.emplace_back(Interval(cuts[k], cuts[k + 1]), q.c0() + q.c1() * p.c0(), q.c1() * p.c1());
    }
  }
  return PLMap(CurveMap::from_pieces(std::move(out)));
}

int modality(const PLMap& f) {
  int turns = 0;
  int last = 0;
  for (const auto& p : f.map().pieces()) {
    const int s = p.c1().sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++turns;
    last = s;
  }
  return turns;
}

Scalar total_variation(const CurveMap& f) {
  Scalar total(0);
  for (const auto& p : f.pieces()) {
    const Scalar& a = p.domain().lo();
    const Scalar& b = p.domain().hi();
    if (auto v = p.vertex(); v && a < *v && *v < b) {
      const Scalar m = p.at(*v);
      total += abs(m - p.at(a)) + abs(p.at(b) - m);
    } else {
      total += abs(p.at(b) - p.at(a));
    }
  }
  return total;
}

Scalar modulus_of_continuity(const CurveMap& f, const Scalar& t) {
  if (t.sign() < 0) throw DomainError("modulus_of_continuity: t must be non-negative");
  if (t.is_zero()) return Scalar(0);
  const Scalar one(1);
  if (!(t < one)) return f.range_on(Interval::unit()).length();

  // Candidate abscissae: breakpoints and interior parabola vertices.
  std::vector<Scalar> anchors = f.breakpoints();
  for (const auto& p : f.pieces())
    if (auto v = p.vertex(); v && p.domain().lo() < *v && *v < p.domain().hi()) anchors.push_back(*v);
  std::sort(anchors.begin(), anchors.end());

  Scalar best(0);
  auto window = [&](const Scalar& lo, const Scalar& hi) {
    best = max(best, f.range_on(Interval(max(lo, Scalar(0)), min(hi, one))).length());
  };
  for (const auto& y : anchors) {
    window(y, y + t);
    window(y - t, y);
  }

  // Windows pinned at both ends (|x-y| = t) with an interior critical point of f(y) - f(y-t).
  if (!f.is_pl()) {
    std::vector<Scalar> shifted;
    for (const auto& b : f.breakpoints()) {
      if (!(b < t)) shifted.push_back(b);
      if (b + t < one) shifted.push_back(b + t);
    }
    shifted.push_back(t);
    shifted.push_back(one);
    shifted = merge_cuts(std::move(shifted), {});
    const auto ps = f.pieces();
    for (std::size_t k = 0; k + 1 < shifted.size(); ++k) {
      const Scalar& lo = shifted[k];
      const Scalar& hi = shifted[k + 1];
      const Scalar mid = (lo + hi) / Scalar(2);
      const Piece& p = ps[f.locate(mid)];
      const Piece& q = ps[f.locate(mid - t)];
      if (p.c2() == q.c2()) continue;
      // p'(y) = q'(y - t)
      Scalar y = (q.c1() - p.c1() - Scalar(2) * q.c2() * t) / (Scalar(2) * (p.c2() - q.c2()));
      if (lo < y && y < hi) window(y - t, y);
    }
  }
  return best;
}

CurveMap affine_combination(std::span<const Scalar> weights, std::span<const CurveMap> maps,
                            const Scalar& offset) {
  if (weights.size() != maps.size()) throw DomainError("affine_combination: weight/map count mismatch");
  std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
  for (const auto& m : maps) cuts = merge_cuts(std::move(cuts), m.breakpoints());
  std::vector<Piece> out;
  out.reserve(cuts.size());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const Scalar mid = (cuts[k] + cuts[k + 1]) / Scalar(2);
    Scalar c0 = offset, c1(0), c2(0);
    for (std::size_t m = 0; m < maps.size(); ++m) {
      const Piece& p = maps[m].pieces()[maps[m].locate(mid)];
      c0 += weights[m] * p.c0();
      c1 += weights[m] * p.c1();
      c2 += weights[m] * p.c2();
    }
    out.emplace_back(Interval(cuts[k], cuts[k + 1]), std::move(c0), std::move(c1), std::move(c2));
  }
  return CurveMap::from_pieces(std::move(out));
}

std::vector<Interval> cell_ranges(const CurveMap& f, std::span<const Scalar> cuts) {
  std::vector<Interval> out;
  if (cuts.size() < 2) return out;
  out.reserve(cuts.size() - 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) out.push_back(f.range_on(Interval(cuts[k], cuts[k + 1])));
  return out;
}

}  // namespace tmap
