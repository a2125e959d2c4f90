#pragma once

#include <string_view>
#include <vector>

#include "tmap/curve_map.hpp"
#include "tmap/sampling.hpp"

namespace tmap::testing {

inline Scalar S(std::string_view text) { return Scalar::parse(text); }

inline Interval I(std::string_view lo, std::string_view hi) { return {S(lo), S(hi)}; }

/// Vertices (0,0), (1/3,1), (2/3,0), (1,1).
inline CurveMap sawtooth3_map() {
  std::vector<Vertex> v{{0, 0}, {S("1/3"), 1}, {S("2/3"), 0}, {1, 1}};
  return CurveMap::from_vertices(v);
}

inline CurveMap square() { return CurveMap::from_pieces({Piece(Interval::unit(), 0, 0, 1)}); }

using Rng = Sampler;

}  // namespace tmap::testing
