#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "tmap/scalar.hpp"

namespace tmap {

/// Closed subinterval [lo, hi] of [0,1]; degenerate intervals (points) are allowed.
class Interval {
 public:
  /// The unit interval.
  Interval() : lo_(0), hi_(1) {}
  /// Throws DomainError unless 0 <= lo <= hi <= 1.
  Interval(Scalar lo, Scalar hi);

  static Interval unit() { return {}; }
  static Interval point(const Scalar& x) { return {x, x}; }

  [[nodiscard]] const Scalar& lo() const { return lo_; }
  [[nodiscard]] const Scalar& hi() const { return hi_; }
  [[nodiscard]] Scalar length() const { return hi_ - lo_; }
  [[nodiscard]] Scalar midpoint() const { return (lo_ + hi_) / Scalar(2); }
  [[nodiscard]] bool degenerate() const { return lo_ == hi_; }
  [[nodiscard]] bool is_unit() const { return lo_.is_zero() && hi_ == Scalar(1); }

  [[nodiscard]] bool contains(const Scalar& x) const { return lo_ <= x && x <= hi_; }
  [[nodiscard]] bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  [[nodiscard]] bool intersects(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  [[nodiscard]] std::optional<Interval> intersection(const Interval& o) const;
  /// Smallest interval containing both.
  [[nodiscard]] Interval hull(const Interval& o) const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.hi_ <=> b.hi_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Interval& j) {
    return os << '[' << j.lo_ << ", " << j.hi_ << ']';
  }

 private:
  Scalar lo_;
  Scalar hi_;
};

/// Finite union of closed intervals, kept sorted with overlapping or touching
/// components merged, so the representation of a set is unique.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& j) : parts_{j} {}
  explicit IntervalSet(std::vector<Interval> parts);

  [[nodiscard]] std::span<const Interval> components() const { return parts_; }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }

  void add(const Interval& j);
  [[nodiscard]] IntervalSet unite(const IntervalSet& o) const;

  [[nodiscard]] bool contains(const Scalar& x) const;
  [[nodiscard]] bool contains(const Interval& j) const;
  [[nodiscard]] bool contains(const IntervalSet& o) const;
  [[nodiscard]] bool intersects(const Interval& j) const;
  [[nodiscard]] bool is_unit() const { return parts_.size() == 1 && parts_.front().is_unit(); }
  /// True when some component is non-degenerate.
  [[nodiscard]] bool has_interior() const;
  /// Smallest interval containing the set; the set must be nonempty.
  [[nodiscard]] Interval hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

 private:
  void normalize();
  std::vector<Interval> parts_;
};

}  // namespace tmap
