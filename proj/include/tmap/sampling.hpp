#pragma once

#include <cstdint>
#include <random>

#include "tmap/curve_map.hpp"

namespace tmap {

/// Deterministic source of random rationals and maps for property checks.
///
/// Draws only raw words from mt19937_64 and never uses the standard
/// distributions, so streams are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }
  /// k / den with k uniform in [0, den].
  Scalar grid(std::uint64_t den);
  /// lo + (hi - lo) * grid(den)
  Scalar unit_fraction_in(const Scalar& lo, const Scalar& hi, std::uint64_t den);

  /// PL map with `laps` pieces, breakpoints on the grid 1/den and values on 1/vden.
  CurveMap pl_map(int laps, std::uint64_t den = 64, std::uint64_t vden = 32);
  /// Piecewise quadratic map: every piece is a quadratic Bezier arc over a
  /// random PL skeleton, with control values in [0,1].
  CurveMap curve_map(int laps, std::uint64_t den = 64, std::uint64_t vden = 32);
  /// PL map on the uniform grid 1/knots whose slopes stay within `lipschitz`
  /// and whose values stay in [lo, hi]; values are multiples of 1/vden.
  CurveMap lipschitz_map(int knots, const Scalar& lipschitz, const Scalar& lo, const Scalar& hi,
                         std::uint64_t vden = 256);
  /// Non-degenerate interval with endpoints on the grid 1/den.
  Interval interval(std::uint64_t den = 64);

 private:
  std::mt19937_64 gen_;
};

}  // namespace tmap
