#pragma once

#include <optional>
#include <vector>

#include "tmap/curve_map.hpp"

namespace tmap {

/// Parameters of a box map: the endpoint values, the vertical extent of the box
/// and the steepness factor (at least 20), which fixes the total variation as
/// steepness * (top - bottom).
struct BoxParams {
  Scalar left;
  Scalar right;
  Scalar bottom;
  Scalar top;
  Scalar steepness{20};

  [[nodiscard]] Scalar height() const { return top - bottom; }
  [[nodiscard]] Interval box() const { return {bottom, top}; }
  /// Throws ParameterError unless bottom < top, left and right lie in the box,
  /// every value lies in [0,1] and steepness >= 20.
  void validate() const;

  friend bool operator==(const BoxParams&, const BoxParams&) = default;
};

/// Piecewise linear surjection of a closed interval onto a box, with one
/// constant |slope| on every lap.
class BoxMap {
 public:
  [[nodiscard]] const Interval& domain() const { return domain_; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const { return vertices_; }
  [[nodiscard]] const Scalar& slope() const { return slope_; }
  /// Interior turning value strictly inside the box, when one was needed.
  [[nodiscard]] const std::optional<Scalar>& meeting_value() const { return meeting_; }
  [[nodiscard]] std::size_t laps() const { return vertices_.size() - 1; }

  /// Throws DomainError outside the domain.
  [[nodiscard]] Scalar eval(const Scalar& x) const;
  [[nodiscard]] Interval image() const;
  [[nodiscard]] Scalar total_variation() const;
  /// The box map as a self-map of [0,1]; requires the domain to be [0,1].
  [[nodiscard]] PLMap to_map() const;

 private:
  friend BoxMap build_box_map(const Interval&, const BoxParams&);
  Interval domain_;
  std::vector<Vertex> vertices_;
  Scalar slope_;
  std::optional<Scalar> meeting_;
};

/// Canonical box map over `domain`: starting at `left`, sweep to the far side
/// of the box and keep alternating between top and bottom for as long as the
/// variation budget allows, then finish at `right`, absorbing any remaining
/// variation with one turning point on the final lap.
///
/// Throws DomainError for a degenerate domain and ParameterError for invalid parameters.
BoxMap build_box_map(const Interval& domain, const BoxParams& params);

/// Appends the turning values of the canonical layout, `left` first and
/// `right` last, to `out`. Returns the meeting value, if any.
std::optional<Scalar> box_turning_values(const BoxParams& params, std::vector<Scalar>& out);

/// Appends the vertices of the canonical box map over `domain` to `out`,
/// skipping the first vertex when `out` already ends at the same point.
void append_box_vertices(const Interval& domain, const BoxParams& params, std::vector<Vertex>& out);

}  // namespace tmap
