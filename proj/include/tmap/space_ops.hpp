#pragma once

#include <optional>

#include "tmap/curve_map.hpp"
#include "tmap/transitivity.hpp"

namespace tmap {

/// Points where a surjective map takes the values 0 and 1.
struct SurjectionWitness {
  Scalar zero_at;
  Scalar one_at;
};

/// Witness points when f([0,1]) = [0,1], nothing otherwise.
std::optional<SurjectionWitness> surjection_witness(const CurveMap& f);
bool is_surjective(const CurveMap& f);

/// f rescaled onto [0,1] by x -> (x - low) / (high - low), with low = min f, high = max f.
struct Normalized {
  Scalar low;
  Scalar high;
  CurveMap map;
};

/// Throws DomainError for a constant map.
Normalized normalize_to_surjection(const CurveMap& f);

/// x -> x^2
CurveMap square_map();
/// Three full laps through (0,0), (1/3,1), (2/3,0), (1,1).
PLMap sawtooth3();
/// x -> 1 - f(x)
CurveMap reflect_values(const CurveMap& f);

/// Transitive maps converging to the identity as n grows.
///
/// Every k/n is fixed, every |slope| is 5, and f([k/n,(k+1)/n]) is exactly
/// [(k-1)/n,(k+2)/n] clipped to [0,1]. Each interior cell dips by 1/n, climbs
/// by 3/n and dips by 1/n; the two outer cells use the clipped targets.
/// Throws ParameterError for n < 5.
PLMap ruette_family(int n);

/// A surjection near g that fixes a small interval pointwise at its ends and
/// maps it onto itself, so no orbit through its interior is dense.
struct Perturbation {
  CurveMap map;
  /// Fixed point of g around which the map was modified.
  Scalar fixed_point;
  /// Half-width of the modified region.
  Scalar radius;
  /// The self-mapped interval.
  Interval trap;
  /// Verdict of the transitivity pipeline on `map`.
  Verdict verdict;
  /// Robust witness at radius `ball_radius`, when the dyadic search finds one.
  std::optional<BallWitness> ball;
  Scalar ball_radius;
};

/// Replaces g near a fixed point x0 by connectors and the parabola through
/// (x0 - r/2, x0 - r/2) and (x0 + r/2, x0 + r/2) with vertex at the left end,
/// choosing the largest dyadic r that keeps the change below epsilon.
///
/// Throws ParameterError for epsilon <= 0 or a non-surjective g.
Perturbation nowhere_dense_perturbation(const PLMap& g, const Scalar& epsilon, const Budget& budget = {});

/// Two transitive maps whose average is the constant 1/2.
struct NonconvexityWitness {
  PLMap first;
  PLMap second;
  CurveMap average;
};
NonconvexityWitness nonconvexity_witness();

}  // namespace tmap
