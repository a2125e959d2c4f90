#pragma once

#include <optional>

#include "tmap/curve_map.hpp"

namespace tmap {

/// Outcome of a transitivity check.
struct Verdict {
  enum class Kind { Certified, Refuted, Inconclusive };

  Kind kind = Kind::Inconclusive;
  /// For Refuted: a closed proper set with interior that the map sends into itself.
  IntervalSet witness;
  /// For Inconclusive: the iteration budget that was exhausted.
  int budget = 0;

  static Verdict certified() { return {Kind::Certified, {}, 0}; }
  static Verdict refuted(IntervalSet w) { return {Kind::Refuted, std::move(w), 0}; }
  static Verdict inconclusive(int budget) { return {Kind::Inconclusive, {}, budget}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(Verdict::Kind kind);

/// True iff f^n(U) meets V, by n exact image iterations.
/// Throws ParameterError for n < 1 and DomainError for degenerate U or V.
bool reach_check(const CurveMap& f, const Interval& u, const Interval& v, int n);

/// Locally-eventually-onto certificate for expanding PL maps.
///
/// Every dyadic cell of length 2^-grid_level, and every lap shorter than
/// 2^(1-grid_level), must be carried onto [0,1] within n_max iterations.
/// With every |slope| above 2, any open interval keeps growing (its larger
/// monotone half stretches by more than 2) until it covers a lap or a whole
/// grid cell, so success proves transitivity.
///
/// Throws PreconditionError when some |slope| is at most 2 and ParameterError
/// for grid_level outside [1,30] or n_max < 1.
Verdict leo_certify(const PLMap& f, int grid_level, int n_max);

/// Searches for a closed proper forward-invariant set with interior.
///
/// Seeds are the dyadic cells of level grid_level, then the pieces of f. Each
/// seed grows by C <- C u image(C), rounded outward to the grid of dyadic points
/// and breakpoints, until it stabilizes or fills [0,1]. A stable set is checked
/// exactly before being returned as Refuted.
Verdict invariant_region_refute(const CurveMap& f, int grid_level, int n_max);

/// Smallest slack by which J holds the rho-thickened image of J, over the sides of J
/// not lying on the boundary of [0,1]. Positive slack means every map within
/// rho of f sends J into itself. Throws DomainError for J = [0,1].
Scalar ball_margin(const CurveMap& f, const Interval& j, const Scalar& rho);

struct BallWitness {
  Interval region;
  Scalar margin;
};

/// The dyadic interval of level grid_level with the largest positive ball margin.
/// Throws ParameterError unless rho > 0.
std::optional<BallWitness> ball_refute(const CurveMap& f, const Scalar& rho, int grid_level);

struct Budget {
  int grid_level = 6;
  int n_max = 64;
};

/// Certificate for expanding PL maps, otherwise the invariant-set search.
/// Both checks are sound and cannot both succeed, so the order only affects cost.
Verdict is_transitive_pipeline(const CurveMap& f, const Budget& budget = {});

}  // namespace tmap
