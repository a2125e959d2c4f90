#include "tmap/box_map.hpp"

#include <algorithm>

#include "tmap/errors.hpp"

namespace tmap {
namespace {

bool in_unit(const Scalar& v) { return v.sign() >= 0 && v <= Scalar(1); }

}  // namespace

void BoxParams::validate() const {
  for (const Scalar* v : {&left, &right, &bottom, &top})
    if (!in_unit(*v)) throw ParameterError("box parameter " + v->str() + " outside [0,1]");
  if (!(bottom < top))
    throw ParameterError("box bottom " + bottom.str() + " must lie below top " + top.str());
  if (left < bottom || top < left || right < bottom || top < right)
    throw ParameterError("box endpoint values must lie in [" + bottom.str() + ", " + top.str() + "]");
  if (steepness < Scalar(20)) throw ParameterError("steepness " + steepness.str() + " is below 20");
}

std::optional<Scalar> box_turning_values(const BoxParams& p, std::vector<Scalar>& out) {
  const Scalar h = p.height();
  const Scalar budget = p.steepness * h;
  const Scalar& first = p.left == p.top ? p.bottom : p.top;
  const Scalar& second = first == p.top ? p.bottom : p.top;
  auto extremum = [&](std::size_t k) -> const Scalar& { return k % 2 == 1 ? first : second; };
  // Variation of left -> e_1 -> ... -> e_k -> right.
  const Scalar lead = abs(first - p.left);
  auto variation = [&](std::size_t k) {
    return lead + Scalar(static_cast<long>(k - 1)) * h + abs(extremum(k) - p.right);
  };

  // The variation grows by 2h every two extrema, so jump close to the answer first.
  std::size_t k = 1;
  {
    const Scalar approx = (budget - lead) / h;
    const mpz_class whole = approx.floor();
    if (whole > 3) k = static_cast<std::size_t>(mpz_class(whole - 2).get_ui());
  }
  while (k > 1 && budget < variation(k)) --k;
  while (!(budget < variation(k + 1))) ++k;
  const Scalar residual = budget - variation(k);

  out.push_back(p.left);
  for (std::size_t i = 1; i <= k; ++i) out.push_back(extremum(i));
  std::optional<Scalar> meeting;
  if (residual.sign() > 0) {
    const Scalar half = residual / Scalar(2);
    meeting = extremum(k) == p.top ? p.right - half : p.right + half;
    out.push_back(*meeting);
  }
  if (!(out.back() == p.right)) out.push_back(p.right);
  return meeting;
}

namespace {

void check_domain(const Interval& domain) {
  if (domain.degenerate())
    throw DomainError("box map domain [" + domain.lo().str() + ", " + domain.hi().str() + "] is degenerate");
}

// Lays the turning values out left to right with legs of width |dy| / slope.
void place(const Interval& domain, const Scalar& slope, const std::vector<Scalar>& values,
           std::vector<Vertex>& out) {
  Scalar x = domain.lo();
  if (out.empty() || !(out.back().x == x) || !(out.back().y == values.front()))
    out.push_back({x, values.front()});
  for (std::size_t i = 1; i < values.size(); ++i) {
    x += abs(values[i] - values[i - 1]) / slope;
    out.push_back({x, values[i]});
  }
  if (!(x == domain.hi())) throw InternalError("box map legs do not fill the domain");
}

}  // namespace

void append_box_vertices(const Interval& domain, const BoxParams& p, std::vector<Vertex>& out) {
  check_domain(domain);
  p.validate();
  std::vector<Scalar> values;
  box_turning_values(p, values);
  place(domain, p.steepness * p.height() / domain.length(), values, out);
}

BoxMap build_box_map(const Interval& domain, const BoxParams& p) {
  check_domain(domain);
  p.validate();
  BoxMap m;
  m.domain_ = domain;
  m.slope_ = p.steepness * p.height() / domain.length();
  std::vector<Scalar> values;
  m.meeting_ = box_turning_values(p, values);
  place(domain, m.slope_, values, m.vertices_);
  return m;
}

Scalar BoxMap::eval(const Scalar& x) const {
  if (!domain_.contains(x)) throw DomainError("x=" + x.str() + " outside the box map domain");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                             [](const Vertex& v, const Scalar& s) { return v.x < s; });
  if (it->x == x) return it->y;
  const Vertex& b = *it;
  const Vertex& a = *std::prev(it);
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Interval BoxMap::image() const {
  Scalar lo = vertices_.front().y, hi = lo;
  for (const auto& v : vertices_) {
    lo = min(lo, v.y);
    hi = max(hi, v.y);
  }
  return {lo, hi};
}

Scalar BoxMap::total_variation() const {
  Scalar total(0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) total += abs(vertices_[i].y - vertices_[i - 1].y);
  return total;
}

PLMap BoxMap::to_map() const {
  if (!domain_.is_unit()) throw DomainError("box map domain is not [0,1]");
  return PLMap::from_vertices(vertices_);
}

}  // namespace tmap
