#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tmap/homotopy.hpp"

namespace tmap {

/// Barycentric coordinates of a point of a simplex: non-negative, summing to 1.
using Barycentric = std::vector<Scalar>;

/// A map from points of a simplex (or its boundary) into the space of maps.
using MapField = std::function<CurveMap(std::span<const Scalar>)>;

/// A bound s -> w(s), non-decreasing in s.
using Modulus = std::function<Scalar(const Scalar&)>;

/// Cone coordinates of a simplex point p = (1 - t) x + t b, with b the
/// barycenter and x on the boundary; t = 0 on the boundary, t = 1 at b.
struct ConePoint {
  Barycentric boundary;
  Scalar t;
};

/// Throws InputError unless p is a barycentric vector of length >= 2.
ConePoint to_cone(std::span<const Scalar> p);
Barycentric from_cone(std::span<const Scalar> boundary, const Scalar& t);
/// max_k |p_k - q_k|
Scalar chebyshev(std::span<const Scalar> p, std::span<const Scalar> q);

/// Map on the boundary of a simplex, with the finite data the construction relies on.
struct BoundaryMap {
  MapField evaluator;
  /// Optional bound on d(phi(x), phi(y)) in terms of max_k |x_k - y_k|; checked at probes.
  Modulus spatial;
  /// Optional bound on the modulus of continuity of every phi(x), uniform in x.
  /// When absent the largest modulus over the probe images is used.
  Modulus equicontinuity;
  /// Boundary points at which the data are checked and diameters estimated.
  std::vector<Barycentric> probes;
};

/// x -> sum_k x_k f_k for vertex maps f_0..f_n, with its certified moduli.
BoundaryMap convex_boundary_map(std::vector<CurveMap> vertex_maps, std::vector<Barycentric> probes);

/// Boundary probes of an n-simplex: every point with coordinates k/resolution
/// and at least one zero coordinate.
std::vector<Barycentric> boundary_grid(int dimension, int resolution);
/// Every point of an n-simplex with coordinates k/resolution.
std::vector<Barycentric> simplex_grid(int dimension, int resolution);

/// Extension of a boundary map over the whole simplex.
///
/// Near the boundary (t <= step) the value is the deformation of phi(x) at
/// time t. Beyond it the boxes of phi(x) at time `step` slide linearly, as t
/// goes to 1, to common target boxes, so the value at the barycenter does not
/// depend on x.
class Extension {
 public:
  /// Value at the simplex point with barycentric coordinates p.
  [[nodiscard]] CurveMap operator()(std::span<const Scalar> p) const;
  [[nodiscard]] CurveMap at(std::span<const Scalar> boundary, const Scalar& t) const;
  /// Box data used for the value at (x, t), t > 0, without joining it into a map.
  [[nodiscard]] std::vector<Box> boxes_at(std::span<const Scalar> boundary, const Scalar& t) const;

  [[nodiscard]] int dimension() const { return dimension_; }
  /// True when the probes saw a constant boundary map and the extension is that constant.
  [[nodiscard]] bool is_constant() const { return constant_.has_value(); }
  /// Switch-over time between the deformation and the sliding boxes.
  [[nodiscard]] const Scalar& step() const { return step_; }
  /// Common target boxes reached at t = 1, one per cell of the partition at `step`.
  [[nodiscard]] const std::vector<BoxParams>& targets() const { return targets_; }
  /// Largest distance between probe images of the boundary map.
  [[nodiscard]] const Scalar& boundary_diameter() const { return diameter_; }
  [[nodiscard]] const Scalar& epsilon() const { return epsilon_; }

 private:
  friend Extension sc_extend(const BoundaryMap&, int, const Scalar&);
  MapField boundary_;
  int dimension_ = 1;
  Scalar epsilon_;
  Scalar diameter_;
  Scalar step_;
  std::optional<CurveMap> constant_;
  std::vector<Interval> cells_;
  std::vector<BoxParams> targets_;
};

/// Extends phi over an n-simplex so that, for every set A containing phi(boundary),
/// diam(image u A) <= (1 + epsilon) diam A.
///
/// Throws InputError when the declared spatial modulus fails at the probes or a
/// probe is not a boundary point, ParameterError unless epsilon > 0.
Extension sc_extend(const BoundaryMap& phi, int dimension, const Scalar& epsilon);

/// Finite abstract simplicial complex on vertices 0..vertex_count-1. Simplices are
/// sorted vertex lists; `close()` adds every face.
struct Complex {
  int vertex_count = 0;
  std::vector<std::vector<int>> simplices;

  /// Sorts each simplex, adds all faces, removes duplicates and orders by
  /// (dimension, first appearance). Throws InputError for bad vertex ids.
  void close();
  [[nodiscard]] bool contains(const std::vector<int>& simplex) const;
};

/// Extension data for a complex: K, the subcomplex L given by `given`, and the map on |L|.
struct ComplexSpec {
  Complex complex;
  /// Value at each vertex; every vertex must be given.
  std::vector<CurveMap> vertex_maps;
  /// Maps on the positive-dimensional simplices of L, in barycentric
  /// coordinates ordered like the simplex's sorted vertex list.
  std::map<std::vector<int>, MapField> given;
  /// Grid resolution of boundary probes for simplices of dimension >= 2.
  int probe_resolution = 4;
};

/// Extension over |K| built simplex by simplex, in (dimension, index) order,
/// with epsilon_i = 2^-(i+2) for the i-th missing simplex (1-based), so the
/// accumulated factor stays below 2.
class ComplexExtension {
 public:
  /// Value at the point with barycentric coordinates p of `simplex` (sorted vertex list).
  [[nodiscard]] CurveMap operator()(const std::vector<int>& simplex, std::span<const Scalar> p) const;
  /// Simplices extended by the construction, in processing order.
  [[nodiscard]] const std::vector<std::vector<int>>& missing() const { return order_; }
  [[nodiscard]] const Extension& extension_of(const std::vector<int>& simplex) const;
  [[nodiscard]] bool is_given(const std::vector<int>& simplex) const;

 private:
  friend ComplexExtension complex_extend(ComplexSpec spec);
  struct State;
  std::shared_ptr<State> state_;
  std::vector<std::vector<int>> order_;
};

/// Throws InputError when a vertex map is missing or a given simplex is not in K.
ComplexExtension complex_extend(ComplexSpec spec);

/// Largest sup distance between any two maps (0 for fewer than two).
/// Pairs whose cell-envelope bound cannot beat the current maximum are skipped.
Scalar sampled_diameter(std::span<const CurveMap> maps);

/// Upper envelope of a set of maps over fixed cells: for each cell, the lowest
/// and highest value any member takes there.
class Envelope {
 public:
  explicit Envelope(std::vector<Scalar> cuts);
  /// Adds a map through its exact ranges on the cells.
  void add(const CurveMap& f);
  /// Adds a joined box family: each box map covers exactly its box on its cell.
  void add(std::span<const Box> boxes);
  /// max over cells of (highest - lowest): bounds every pairwise sup distance.
  [[nodiscard]] Scalar diameter_bound() const;
  [[nodiscard]] std::size_t members() const { return members_; }

 private:
  std::vector<Scalar> cuts_;
  std::vector<std::optional<Interval>> hull_;
  std::size_t members_ = 0;
};

}  // namespace tmap
