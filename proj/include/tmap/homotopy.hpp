#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tmap/box_map.hpp"
#include "tmap/curve_map.hpp"

namespace tmap {

/// Cells [(i-1)t, it] for i = 1..count, then [count*t, 1], where count is the
/// largest non-negative integer with count*t < 1.
struct Partition {
  Scalar step;
  long count = 0;
  std::vector<Interval> cells;
};

/// Throws DomainError unless 0 < t <= 1.
Partition partition(const Scalar& t);

/// Box assigned to one partition cell.
struct Box {
  Interval cell;
  /// max(|cell|, |f(cell)|)
  Scalar spread;
  BoxParams params;

  [[nodiscard]] Interval target() const { return params.box(); }
};

/// Boxes of f over the partition of step t: each box pads f(cell) by four
/// times the spread on both sides, clamped to [0,1].
std::vector<Box> box_data(const CurveMap& f, const Scalar& t, const Scalar& steepness = Scalar(20));

/// Joins box maps over consecutive cells tiling [0,1] into one map.
/// Adjacent boxes must agree on their shared endpoint value.
PLMap join_boxes(std::span<const Box> boxes);

/// The deformation: f itself at t = 0, otherwise the joined box maps over the
/// partition of step t. Throws DomainError unless 0 <= t <= 1.
CurveMap apply_homotopy(const CurveMap& f, const Scalar& t, const Scalar& steepness = Scalar(20));

/// Shared boxes of a finite family of maps: for each cell, the lowest bottom
/// and the highest top among the members' boxes.
class FamilyBounds {
 public:
  FamilyBounds(std::vector<CurveMap> family, Scalar step) : family_(std::move(family)), step_(std::move(step)) {}

  /// Largest dyadic step t with max(t, modulus of the family at t) below epsilon/10.
  [[nodiscard]] const Scalar& step() const { return step_; }
  [[nodiscard]] const std::vector<CurveMap>& family() const { return family_; }
  /// Envelope of cell i (0-based) at step t.
  [[nodiscard]] Interval bound(std::size_t i, const Scalar& t) const;
  /// Envelopes of every cell at step t.
  [[nodiscard]] std::vector<Interval> bounds(const Scalar& t) const;

 private:
  std::vector<CurveMap> family_;
  Scalar step_;
};

/// Throws ParameterError for an empty family or epsilon <= 0.
FamilyBounds family_box_bounds(std::vector<CurveMap> family, const Scalar& epsilon);

/// Largest modulus of continuity over a family at t.
Scalar family_modulus(std::span<const CurveMap> family, const Scalar& t);

/// Step size guaranteeing that the deformation moves every map near f by less
/// than 27/28 of epsilon.
struct LocalDelta {
  /// Largest dyadic step below `radius` on which f oscillates by less than `radius`.
  Scalar step;
  /// epsilon / 28: the neighbourhood radius around f.
  Scalar radius;
};

/// Throws ParameterError unless 0 < epsilon.
LocalDelta local_delta(const CurveMap& f, const Scalar& epsilon);

/// Sends the j-th (1-based) pair (f_j, t_j) to the deformation of f_j at t_j
/// with steepness 20 + j, so that the outputs separate.
std::vector<CurveMap> sdap_discretize(std::span<const std::pair<CurveMap, Scalar>> family);

/// max f(J) - min f(J).
Scalar amplitude(const CurveMap& f, const Interval& j);

}  // namespace tmap
