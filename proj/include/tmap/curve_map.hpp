#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tmap/interval.hpp"
#include "tmap/scalar.hpp"

namespace tmap {

/// A point of a graph.
struct Vertex {
  Scalar x;
  Scalar y;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Polynomial c0 + c1*x + c2*x^2 (global abscissa) restricted to a closed domain.
class Piece {
 public:
  Piece(Interval domain, Scalar c0, Scalar c1, Scalar c2 = Scalar(0));

  [[nodiscard]] const Interval& domain() const { return domain_; }
  [[nodiscard]] const Scalar& c0() const { return c0_; }
  [[nodiscard]] const Scalar& c1() const { return c1_; }
  [[nodiscard]] const Scalar& c2() const { return c2_; }
  [[nodiscard]] bool affine() const { return c2_.is_zero(); }

  /// Polynomial value; no domain check.
  [[nodiscard]] Scalar at(const Scalar& x) const;
  /// Derivative at x.
  [[nodiscard]] Scalar derivative(const Scalar& x) const { return c1_ + Scalar(2) * c2_ * x; }
  /// Abscissa of the parabola's vertex, for quadratic pieces.
  [[nodiscard]] std::optional<Scalar> vertex() const;
  /// Exact [min, max] of the polynomial over `sub`, which must lie inside the domain.
  [[nodiscard]] Interval range_on(const Interval& sub) const;
  [[nodiscard]] bool same_polynomial(const Piece& o) const {
    return c0_ == o.c0_ && c1_ == o.c1_ && c2_ == o.c2_;
  }

  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  Interval domain_;
  Scalar c0_, c1_, c2_;
};

/// Continuous self-map of [0,1] made of finitely many polynomial pieces of degree <= 2.
///
/// Construction checks that the piece domains tile [0,1] without zero-length
/// pieces, that adjacent pieces agree at shared endpoints, and that every value
/// lies in [0,1]. Adjacent pieces carrying the same polynomial are merged, so
/// equal maps have equal representations. Values are immutable and cheap to copy.
class CurveMap {
 public:
  static CurveMap from_pieces(std::vector<Piece> pieces);
  /// Piecewise linear interpolation; x must increase strictly from 0 to 1.
  static CurveMap from_vertices(std::span<const Vertex> vertices);
  static CurveMap identity();
  static CurveMap constant(const Scalar& c);

  [[nodiscard]] std::span<const Piece> pieces() const { return data_->pieces; }
  [[nodiscard]] std::size_t size() const { return data_->pieces.size(); }
  /// Range of piece i over its whole domain.
  [[nodiscard]] const Interval& piece_range(std::size_t i) const { return data_->ranges[i]; }
  /// Piece endpoints, 0 and 1 included.
  [[nodiscard]] std::vector<Scalar> breakpoints() const;
  [[nodiscard]] bool is_pl() const;

  /// Index of the piece whose domain contains x, preferring the right-hand piece at breakpoints.
  [[nodiscard]] std::size_t locate(const Scalar& x) const;

  /// Throws DomainError for x outside [0,1].
  [[nodiscard]] Scalar eval(const Scalar& x) const;
  [[nodiscard]] Scalar operator()(const Scalar& x) const { return eval(x); }
  [[nodiscard]] Interval range_on(const Interval& j) const;
  [[nodiscard]] IntervalSet image(const IntervalSet& u) const;

  friend bool operator==(const CurveMap& a, const CurveMap& b) {
    return a.data_ == b.data_ || a.data_->pieces == b.data_->pieces;
  }

 private:
  struct Data {
    std::vector<Piece> pieces;
    std::vector<Interval> ranges;   // exact range of each piece over its domain
    std::vector<std::uint32_t> arg_min, arg_max;  // segment tree over `ranges`
    std::size_t leaves = 0;
  };
  explicit CurveMap(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<const Data> index(std::vector<Piece> pieces);
  static std::shared_ptr<const Data> index(std::vector<Piece> pieces, std::vector<Interval> ranges);
  [[nodiscard]] std::size_t locate_left(const Scalar& x) const;
  [[nodiscard]] Interval range_of_pieces(std::size_t first, std::size_t last) const;

  std::shared_ptr<const Data> data_;
};

/// A CurveMap whose pieces are all affine.
class PLMap {
 public:
  /// Throws ParameterError if some piece is quadratic.
  explicit PLMap(CurveMap map);
  static PLMap from_vertices(std::span<const Vertex> vertices) {
    return PLMap(CurveMap::from_vertices(vertices));
  }

  [[nodiscard]] const CurveMap& map() const { return map_; }
  operator const CurveMap&() const { return map_; }  // NOLINT(google-explicit-constructor)
  [[nodiscard]] std::vector<Vertex> vertices() const;
  [[nodiscard]] Scalar eval(const Scalar& x) const { return map_.eval(x); }
  /// Smallest |slope| over all pieces.
  [[nodiscard]] Scalar slope_floor() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  CurveMap map_;
};

Scalar eval(const CurveMap& f, const Scalar& x);
Interval range_on(const CurveMap& f, const Interval& j);
IntervalSet image_set(const CurveMap& f, const IntervalSet& u);

/// Exact sup |f - g| over [0,1].
Scalar sup_distance(const CurveMap& f, const CurveMap& g);
/// Exact sup |f - g| over `on`.
Scalar sup_distance(const CurveMap& f, const CurveMap& g, const Interval& on);

/// The map x -> g(f(x)).
PLMap compose_pl(const PLMap& f, const PLMap& g);

/// Number of turning points in (0,1): direction changes between consecutive non-flat laps.
int modality(const PLMap& f);

/// Sum of |increments| over monotone laps.
Scalar total_variation(const CurveMap& f);

/// Exact modulus of continuity: sup{|f(x)-f(y)| : |x-y| <= t}.
Scalar modulus_of_continuity(const CurveMap& f, const Scalar& t);

/// offset + sum_k weights[k] * maps[k]; the result must stay inside [0,1].
CurveMap affine_combination(std::span<const Scalar> weights, std::span<const CurveMap> maps,
                            const Scalar& offset = Scalar(0));

/// Ranges of f over consecutive cells [cuts[k], cuts[k+1]]; cuts sorted inside [0,1].
std::vector<Interval> cell_ranges(const CurveMap& f, std::span<const Scalar> cuts);

}  // namespace tmap
