#include "tmap/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tmap/errors.hpp"

namespace tmap {
namespace {

const Scalar kSteepness(20);

void check_weights(std::span<const Scalar> p) {
  if (p.empty()) throw InputError("empty barycentric vector");
  Scalar sum(0);
  for (const auto& c : p) {
    if (c.sign() < 0) throw InputError("negative barycentric coordinate " + c.str());
    sum += c;
  }
  if (!(sum == Scalar(1))) throw InputError("barycentric coordinates sum to " + sum.str());
}

void check_barycentric(std::span<const Scalar> p) {
  if (p.size() < 2) throw InputError("a simplex point needs at least two barycentric coordinates");
  check_weights(p);
}

bool on_boundary(std::span<const Scalar> p) {
  return std::any_of(p.begin(), p.end(), [](const Scalar& c) { return c.is_zero(); });
}

void check_boundary(std::span<const Scalar> x, int dimension) {
  check_barycentric(x);
  if (static_cast<int>(x.size()) != dimension + 1)
    throw InputError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(dimension + 1));
  if (!on_boundary(x)) throw InputError("point is not on the simplex boundary");
}

Scalar lerp(const Scalar& from, const Scalar& to, const Scalar& tau) { return from + (to - from) * tau; }

}  // namespace

ConePoint to_cone(std::span<const Scalar> p) {
  check_barycentric(p);
  const Scalar n1(static_cast<long>(p.size()));
  const Scalar t = n1 * *std::min_element(p.begin(), p.end());
  Barycentric x(p.size());
  if (t == Scalar(1)) {
    // The apex: any boundary point works, take the centre of the facet opposite vertex 0.
    x[0] = Scalar(0);
    for (std::size_t k = 1; k < p.size(); ++k) x[k] = Scalar(1, static_cast<long>(p.size()) - 1);
    return {std::move(x), t};
  }
  const Scalar share = t / n1;
  const Scalar scale = Scalar(1) - t;
  for (std::size_t k = 0; k < p.size(); ++k) x[k] = (p[k] - share) / scale;
  return {std::move(x), t};
}

Barycentric from_cone(std::span<const Scalar> boundary, const Scalar& t) {
  check_barycentric(boundary);
  if (t.sign() < 0 || Scalar(1) < t) throw InputError("cone height " + t.str() + " outside [0,1]");
  const Scalar share = t / Scalar(static_cast<long>(boundary.size()));
  Barycentric p;
  p.reserve(boundary.size());
  for (const auto& c : boundary) p.push_back((Scalar(1) - t) * c + share);
  return p;
}

Scalar chebyshev(std::span<const Scalar> p, std::span<const Scalar> q) {
  if (p.size() != q.size()) throw InputError("points of different dimension");
  Scalar best(0);
  for (std::size_t k = 0; k < p.size(); ++k) best = max(best, abs(p[k] - q[k]));
  return best;
}

BoundaryMap convex_boundary_map(std::vector<CurveMap> vertex_maps, std::vector<Barycentric> probes) {
  if (vertex_maps.size() < 2) throw InputError("need at least two vertex maps");
  // |sum (x_k - y_k) f_k| = |sum (x_k - y_k)(f_k - f_0)| <= (n+1) |x - y| max_k d(f_k, f_0)
  Scalar spread(0);
  for (const auto& f : vertex_maps) spread = max(spread, sup_distance(f, vertex_maps.front()));
  const Scalar lipschitz = Scalar(static_cast<long>(vertex_maps.size())) * spread;
  auto maps = std::make_shared<const std::vector<CurveMap>>(std::move(vertex_maps));
  BoundaryMap out;
  out.evaluator = [maps](std::span<const Scalar> x) {
    if (x.size() != maps->size()) throw InputError("point dimension does not match the vertex maps");
    return affine_combination(x, *maps);
  };
  out.spatial = [lipschitz](const Scalar& s) { return lipschitz * s; };
  out.equicontinuity = [maps](const Scalar& s) { return family_modulus(*maps, s); };
  out.probes = std::move(probes);
  return out;
}

namespace {

void grid_points(int parts, int remaining, Barycentric& current, std::vector<Barycentric>& out) {
  const std::size_t slot = current.size();
  if (slot + 1 == current.capacity()) {
    current.push_back(Scalar(remaining, parts));
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    current.push_back(Scalar(k, parts));
    grid_points(parts, remaining - k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Barycentric> simplex_grid(int dimension, int resolution) {
  if (dimension < 1 || resolution < 1) throw ParameterError("simplex_grid needs dimension and resolution >= 1");
  std::vector<Barycentric> out;
  Barycentric current;
  current.reserve(static_cast<std::size_t>(dimension) + 1);
  grid_points(resolution, resolution, current, out);
  return out;
}

std::vector<Barycentric> boundary_grid(int dimension, int resolution) {
  auto all = simplex_grid(dimension, resolution);
  std::erase_if(all, [](const Barycentric& p) { return !on_boundary(p); });
  return all;
}

CurveMap Extension::operator()(std::span<const Scalar> p) const {
  if (static_cast<int>(p.size()) != dimension_ + 1) throw InputError("point dimension does not match the simplex");
  const ConePoint c = to_cone(p);
  return at(c.boundary, c.t);
}

std::vector<Box> Extension::boxes_at(std::span<const Scalar> boundary, const Scalar& t) const {
  check_boundary(boundary, dimension_);
  if (t.sign() <= 0 || Scalar(1) < t) throw DomainError("cone height " + t.str() + " outside (0,1]");
  if (constant_) return box_data(*constant_, t, kSteepness);
  const CurveMap f = boundary_(boundary);
  if (!(step_ < t)) return box_data(f, t, kSteepness);
  auto boxes = box_data(f, step_, kSteepness);
  const Scalar tau = (t - step_) / (Scalar(1) - step_);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    BoxParams& p = boxes[i].params;
    const BoxParams& q = targets_[i];
    p = {lerp(p.left, q.left, tau), lerp(p.right, q.right, tau), lerp(p.bottom, q.bottom, tau),
         lerp(p.top, q.top, tau), kSteepness};
  }
  return boxes;
}

CurveMap Extension::at(std::span<const Scalar> boundary, const Scalar& t) const {
  check_boundary(boundary, dimension_);
  if (t.sign() < 0 || Scalar(1) < t) throw DomainError("cone height " + t.str() + " outside [0,1]");
  if (constant_) return *constant_;
  if (t == Scalar(1)) {
    std::vector<Box> boxes;
    boxes.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) boxes.push_back({cells_[i], Scalar(0), targets_[i]});
    return join_boxes(boxes).map();
  }
  if (!(step_ < t)) return apply_homotopy(boundary_(boundary), t, kSteepness);
  const auto boxes = boxes_at(boundary, t);
  return join_boxes(boxes).map();
}

Extension sc_extend(const BoundaryMap& phi, int dimension, const Scalar& epsilon) {
  if (dimension < 1) throw ParameterError("simplex dimension must be at least 1");
  if (epsilon.sign() <= 0) throw ParameterError("epsilon must be positive");
  if (!phi.evaluator) throw InputError("boundary map has no evaluator");
  if (phi.probes.empty()) throw InputError("boundary map has no probes");
  for (const auto& x : phi.probes) check_boundary(x, dimension);

  std::vector<CurveMap> images;
  images.reserve(phi.probes.size());
  for (const auto& x : phi.probes) images.push_back(phi.evaluator(x));

  Scalar diameter(0);
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) {
      const Scalar d = sup_distance(images[a], images[b]);
      if (phi.spatial) {
        const Scalar bound = phi.spatial(chebyshev(phi.probes[a], phi.probes[b]));
        if (bound < d)
          throw InputError("declared modulus fails between probes " + std::to_string(a) + " and " +
                           std::to_string(b) + ": distance " + d.str() + " exceeds " + bound.str());
      }
      diameter = max(diameter, d);
    }

  Extension out;
  out.boundary_ = phi.evaluator;
  out.dimension_ = dimension;
  out.epsilon_ = epsilon;
  out.diameter_ = diameter;
  if (diameter.is_zero()) {
    out.constant_ = images.front();
    out.step_ = Scalar(1);
    return out;
  }

  // Every box of g at step t has height at most |g(cell)| + 8 max(t, w(t)) <= 9 max(t, w(t)),
  // and both g and its deformation stay inside the boxes.
  const Scalar allowance = epsilon * diameter / Scalar(4);
  auto modulus = [&](const Scalar& t) {
    return phi.equicontinuity ? phi.equicontinuity(t) : family_modulus(images, t);
  };
  Scalar t = largest_dyadic_below(allowance / Scalar(9));
  while (!(Scalar(9) * max(t, modulus(t)) < allowance)) t /= Scalar(2);
  out.step_ = t;

  const FamilyBounds family(images, t);
  const auto bounds = family.bounds(t);
  const Scalar ceiling = diameter + epsilon * diameter / Scalar(2);
  for (const auto& b : bounds)
    if (ceiling < b.length()) throw InternalError("family box exceeds diameter allowance");

  out.cells_ = partition(t).cells;
  std::vector<Scalar> junction;
  junction.reserve(bounds.size() + 1);
  junction.push_back(bounds.front().midpoint());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const auto overlap = bounds[i].intersection(bounds[i + 1]);
    if (!overlap) throw InternalError("adjacent family boxes do not overlap");
    junction.push_back(overlap->midpoint());
  }
  junction.push_back(bounds.back().midpoint());
  out.targets_.reserve(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i)
    out.targets_.push_back({junction[i], junction[i + 1], bounds[i].lo(), bounds[i].hi(), kSteepness});
  return out;
}

void Complex::close() {
  std::vector<std::vector<int>> all;
  std::set<std::vector<int>> seen;
  for (auto s : simplices) {
    if (s.empty()) throw InputError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in a simplex");
    for (int v : s)
      if (v < 0 || v >= vertex_count) throw InputError("vertex id " + std::to_string(v) + " out of range");
    if (s.size() > 30) throw InputError("simplex dimension too large");
    const unsigned n = static_cast<unsigned>(s.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (unsigned k = 0; k < n; ++k)
        if (mask & (1u << k)) face.push_back(s[k]);
      if (seen.insert(face).second) all.push_back(std::move(face));
    }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (seen.insert({v}).second) all.push_back({v});
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  simplices = std::move(all);
}

bool Complex::contains(const std::vector<int>& simplex) const {
  return std::find(simplices.begin(), simplices.end(), simplex) != simplices.end();
}

struct ComplexExtension::State {
  ComplexSpec spec;
  std::map<std::vector<int>, Extension> built;

  CurveMap eval(const std::vector<int>& simplex, std::span<const Scalar> p) const {
    if (p.size() != simplex.size()) throw InputError("point dimension does not match the simplex");
    check_weights(p);
    std::vector<int> face;
    Barycentric coords;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (!p[k].is_zero()) face.push_back(simplex[k]), coords.push_back(p[k]);
    if (face.size() == 1) return spec.vertex_maps.at(static_cast<std::size_t>(face.front()));
    if (const auto it = spec.given.find(face); it != spec.given.end()) return it->second(coords);
    if (const auto it = built.find(face); it != built.end()) return it->second(coords);
    throw InternalError("face evaluated before it was extended");
  }
};

CurveMap ComplexExtension::operator()(const std::vector<int>& simplex, std::span<const Scalar> p) const {
  if (!state_->spec.complex.contains(simplex)) throw InputError("simplex is not in the complex");
  return state_->eval(simplex, p);
}

const Extension& ComplexExtension::extension_of(const std::vector<int>& simplex) const {
  const auto it = state_->built.find(simplex);
  if (it == state_->built.end()) throw InputError("simplex was not extended");
  return it->second;
}

bool ComplexExtension::is_given(const std::vector<int>& simplex) const {
  return simplex.size() == 1 || state_->spec.given.contains(simplex);
}

ComplexExtension complex_extend(ComplexSpec spec) {
  spec.complex.close();
  if (spec.vertex_maps.size() != static_cast<std::size_t>(spec.complex.vertex_count))
    throw InputError("every vertex needs a map");
  if (spec.probe_resolution < 1) throw ParameterError("probe resolution must be positive");
  for (const auto& [s, f] : spec.given) {
    if (!std::is_sorted(s.begin(), s.end()) || !spec.complex.contains(s))
      throw InputError("given simplex is not a sorted simplex of the complex");
    if (s.size() < 2 || !f) throw InputError("given simplices need dimension >= 1 and an evaluator");
    // L must be a subcomplex: every face of dimension >= 1 is given too.
    const unsigned n = static_cast<unsigned>(s.size());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> face;
      for (unsigned k = 0; k < n; ++k)
        if (mask & (1u << k)) face.push_back(s[k]);
      if (face.size() > 1 && !spec.given.contains(face)) throw InputError("given simplices do not form a subcomplex");
    }
  }

  ComplexExtension out;
  out.state_ = std::make_shared<ComplexExtension::State>();
  ComplexExtension::State& state = *out.state_;
  state.spec = std::move(spec);
  int index = 0;
  for (const auto& s : state.spec.complex.simplices) {
    if (s.size() < 2 || state.spec.given.contains(s)) continue;
    ++index;
    const int dimension = static_cast<int>(s.size()) - 1;
    BoundaryMap phi;
    const ComplexExtension::State* view = &state;
    phi.evaluator = [view, s](std::span<const Scalar> x) { return view->eval(s, x); };
    phi.probes = dimension == 1 ? std::vector<Barycentric>{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}
                                : boundary_grid(dimension, state.spec.probe_resolution);
    const Scalar epsilon = dyadic(static_cast<unsigned>(index + 2));
    state.built.emplace(s, sc_extend(phi, dimension, epsilon));
    out.order_.push_back(s);
  }
  return out;
}

Scalar sampled_diameter(std::span<const CurveMap> maps) {
  if (maps.size() < 2) return Scalar(0);
  // Branch and bound: a cell where the two ranges cannot differ by more than the
  // current best needs no exact comparison.
  constexpr long kCells = 256;
  std::vector<Scalar> cuts;
  for (long k = 0; k <= kCells; ++k) cuts.emplace_back(k, kCells);
  std::vector<std::vector<Interval>> ranges;
  ranges.reserve(maps.size());
  for (const auto& f : maps) ranges.push_back(cell_ranges(f, cuts));

  auto cell_bound = [&](std::size_t a, std::size_t b, std::size_t k) {
    const Interval &u = ranges[a][k], &v = ranges[b][k];
    return max(u.hi() - v.lo(), v.hi() - u.lo());
  };
  struct Pair {
    Scalar bound;
    std::size_t a, b;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = a + 1; b < maps.size(); ++b) {
      Scalar bound(0);
      for (std::size_t k = 0; k < kCells; ++k) bound = max(bound, cell_bound(a, b, k));
      pairs.push_back({std::move(bound), a, b});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return y.bound < x.bound; });
  Scalar best(0);
  for (const auto& p : pairs) {
    if (!(best < p.bound)) break;
    std::vector<std::pair<Scalar, std::size_t>> cells;
    for (std::size_t k = 0; k < kCells; ++k)
      if (Scalar u = cell_bound(p.a, p.b, k); best < u) cells.emplace_back(std::move(u), k);
    std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) { return y.first < x.first; });
    for (const auto& [u, k] : cells) {
      if (!(best < u)) break;
      best = max(best, sup_distance(maps[p.a], maps[p.b], Interval(cuts[k], cuts[k + 1])));
    }
  }
  return best;
}

Envelope::Envelope(std::vector<Scalar> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.size() < 2 || !std::is_sorted(cuts_.begin(), cuts_.end()) || !(cuts_.front() == Scalar(0)) ||
      !(cuts_.back() == Scalar(1)))
    throw ParameterError("envelope cuts must rise from 0 to 1");
  hull_.resize(cuts_.size() - 1);
}

void Envelope::add(const CurveMap& f) {
  const auto ranges = cell_ranges(f, cuts_);
  for (std::size_t k = 0; k < ranges.size(); ++k) hull_[k] = hull_[k] ? hull_[k]->hull(ranges[k]) : ranges[k];
  ++members_;
}

void Envelope::add(std::span<const Box> boxes) {
  for (const auto& box : boxes) {
    // Cells meeting the interior of the box's cell; a degenerate overlap adds nothing new
    // since the box map at a shared endpoint equals a value of the neighbouring box.
    auto first = std::upper_bound(cuts_.begin(), cuts_.end(), box.cell.lo());
    auto last = std::lower_bound(cuts_.begin(), cuts_.end(), box.cell.hi());
    const auto begin = static_cast<std::size_t>(first - cuts_.begin()) - 1;
    const auto end = static_cast<std::size_t>(last - cuts_.begin());
    const Interval target = box.target();
    for (std::size_t k = begin; k < end; ++k) hull_[k] = hull_[k] ? hull_[k]->hull(target) : target;
  }
  ++members_;
}

Scalar Envelope::diameter_bound() const {
  Scalar best(0);
  for (const auto& h : hull_)
    if (h) best = max(best, h->length());
  return best;
}

}  // namespace tmap
