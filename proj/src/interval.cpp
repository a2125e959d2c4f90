#include "tmap/interval.hpp"

#include <algorithm>

namespace tmap {

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.sign() < 0 || hi_ > Scalar(1) || hi_ < lo_)
    throw DomainError("interval [" + lo_.str() + ", " + hi_.str() + "] is not a subinterval of [0,1]");
}

std::optional<Interval> Interval::intersection(const Interval& o) const {
  if (!intersects(o)) return std::nullopt;
  return Interval(max(lo_, o.lo_), min(hi_, o.hi_));
}

Interval Interval::hull(const Interval& o) const { return {min(lo_, o.lo_), max(hi_, o.hi_)}; }

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) { normalize(); }

void IntervalSet::normalize() {
  if (parts_.size() < 2) return;
  std::sort(parts_.begin(), parts_.end());
  std::vector<Interval> merged;
  merged.reserve(parts_.size());
  for (auto& j : parts_) {
    if (!merged.empty() && !(merged.back().hi() < j.lo())) {
      if (merged.back().hi() < j.hi()) merged.back() = Interval(merged.back().lo(), j.hi());
    } else {
      merged.push_back(std::move(j));
    }
  }
  parts_ = std::move(merged);
}

void IntervalSet::add(const Interval& j) {
  parts_.push_back(j);
  normalize();
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all(parts_.begin(), parts_.end());
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(all));
}

bool IntervalSet::contains(const Scalar& x) const { return contains(Interval::point(x)); }

bool IntervalSet::contains(const Interval& j) const {
  // Components are disjoint and non-touching, so j must sit inside one of them.
  auto it = std::upper_bound(parts_.begin(), parts_.end(), j.lo(),
                             [](const Scalar& x, const Interval& c) { return x < c.lo(); });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(j);
}

bool IntervalSet::contains(const IntervalSet& o) const {
  return std::all_of(o.parts_.begin(), o.parts_.end(), [&](const Interval& j) { return contains(j); });
}

bool IntervalSet::intersects(const Interval& j) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& c) { return c.intersects(j); });
}

bool IntervalSet::has_interior() const {
  return std::any_of(parts_.begin(), parts_.end(), [](const Interval& c) { return !c.degenerate(); });
}

Interval IntervalSet::hull() const {
  if (parts_.empty()) throw DomainError("hull of an empty interval set");
  return {parts_.front().lo(), parts_.back().hi()};
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.parts_.size(); ++i) os << (i ? ", " : "") << s.parts_[i];
  return os << '}';
}

}  // namespace tmap
