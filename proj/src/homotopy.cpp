#include "tmap/homotopy.hpp"

#include "tmap/errors.hpp"

namespace tmap {
namespace {

Box make_box(const CurveMap& f, const Interval& cell, const Scalar& steepness) {
  const Interval img = f.range_on(cell);
  Scalar spread = max(cell.length(), img.length());
  const Scalar pad = Scalar(4) * spread;
  BoxParams p{f.eval(cell.lo()), f.eval(cell.hi()), max(Scalar(0), img.lo() - pad),
              min(Scalar(1), img.hi() + pad), steepness};
  return {cell, std::move(spread), std::move(p)};
}

}  // namespace

Partition partition(const Scalar& t) {
  if (t.sign() <= 0 || Scalar(1) < t) throw DomainError("partition step " + t.str() + " outside (0,1]");
  Partition p;
  p.step = t;
  const mpz_class count = (Scalar(1) / t).ceil() - 1;
  if (!count.fits_slong_p()) throw DomainError("partition step " + t.str() + " is too small");
  p.count = count.get_si();
  p.cells.reserve(static_cast<std::size_t>(p.count) + 1);
  Scalar lo(0);
  for (long i = 1; i <= p.count; ++i) {
    Scalar hi = Scalar(i) * t;
    p.cells.emplace_back(lo, hi);
    lo = std::move(hi);
  }
  p.cells.emplace_back(lo, Scalar(1));
  return p;
}

std::vector<Box> box_data(const CurveMap& f, const Scalar& t, const Scalar& steepness) {
  const Partition part = partition(t);
  std::vector<Box> out;
  out.reserve(part.cells.size());
  for (const auto& cell : part.cells) out.push_back(make_box(f, cell, steepness));
  return out;
}

PLMap join_boxes(std::span<const Box> boxes) {
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (i > 0 && !(boxes[i - 1].params.right == boxes[i].params.left))
      throw DomainError("boxes disagree at x=" + boxes[i].cell.lo().str());
    append_box_vertices(boxes[i].cell, boxes[i].params, vertices);
  }
  return PLMap::from_vertices(vertices);
}

CurveMap apply_homotopy(const CurveMap& f, const Scalar& t, const Scalar& steepness) {
  if (t.sign() < 0 || Scalar(1) < t) throw DomainError("homotopy time " + t.str() + " outside [0,1]");
  if (t.is_zero()) return f;
  const auto boxes = box_data(f, t, steepness);
  return join_boxes(boxes).map();
}

namespace {

Interval envelope(const std::vector<CurveMap>& family, const Interval& cell) {
  Scalar lo(1), hi(0);
  for (const auto& f : family) {
    const Box b = make_box(f, cell, Scalar(20));
    lo = min(lo, b.params.bottom);
    hi = max(hi, b.params.top);
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

Interval FamilyBounds::bound(std::size_t i, const Scalar& t) const {
  const Partition part = partition(t);
  if (i >= part.cells.size()) throw DomainError("cell index out of range");
  return envelope(family_, part.cells[i]);
}

std::vector<Interval> FamilyBounds::bounds(const Scalar& t) const {
  const Partition part = partition(t);
  std::vector<Interval> out;
  out.reserve(part.cells.size());
  for (const auto& cell : part.cells) out.push_back(envelope(family_, cell));
  return out;
}

Scalar family_modulus(std::span<const CurveMap> family, const Scalar& t) {
  Scalar best(0);
  for (const auto& f : family) best = max(best, modulus_of_continuity(f, t));
  return best;
}

FamilyBounds family_box_bounds(std::vector<CurveMap> family, const Scalar& epsilon) {
  if (family.empty()) throw ParameterError("family_box_bounds needs a nonempty family");
  if (epsilon.sign() <= 0) throw ParameterError("epsilon must be positive");
  const Scalar bar = epsilon / Scalar(10);
  Scalar t = largest_dyadic_below(bar);
  while (!(family_modulus(family, t) < bar)) t /= Scalar(2);
  return {std::move(family), std::move(t)};
}

LocalDelta local_delta(const CurveMap& f, const Scalar& epsilon) {
  if (epsilon.sign() <= 0) throw ParameterError("epsilon must be positive");
  const Scalar radius = epsilon / Scalar(28);
  Scalar t = largest_dyadic_below(radius);
  while (!(modulus_of_continuity(f, t) < radius)) t /= Scalar(2);
  return {std::move(t), radius};
}

std::vector<CurveMap> sdap_discretize(std::span<const std::pair<CurveMap, Scalar>> family) {
  std::vector<CurveMap> out;
  out.reserve(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& [f, t] = family[j];
    if (t.sign() <= 0 || Scalar(1) < t) throw DomainError("step " + t.str() + " outside (0,1]");
    out.push_back(apply_homotopy(f, t, Scalar(20 + static_cast<long>(j) + 1)));
  }
  return out;
}

Scalar amplitude(const CurveMap& f, const Interval& j) { return f.range_on(j).length(); }

}  // namespace tmap
