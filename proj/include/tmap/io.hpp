#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "tmap/curve_map.hpp"
#include "tmap/transitivity.hpp"

namespace tmap {

/// Echoed invocation parameters, serialized in key order.
using Parameters = std::map<std::string, std::string>;

/// Map document: {"pieces": [{"c0","c1","c2","x0","x1"}...], "version": 1}, every
/// number a canonical rational string. Output is indented JSON with a final newline.
std::string encode_map(const CurveMap& f);
/// Map document for pieces tiling any interval, such as a box map on a subinterval.
std::string encode_pieces(std::span<const Piece> pieces);
/// Throws InputError for malformed documents or pieces that do not form a map of [0,1].
CurveMap decode_map(std::string_view text);

struct VerdictDocument {
  Verdict verdict;
  Parameters parameters;
};
/// {"verdict", "witness" (refuted only), "budget" (inconclusive only), "parameters"}
std::string encode_verdict(const Verdict& verdict, const Parameters& parameters);
/// Throws InputError for malformed documents.
VerdictDocument decode_verdict(std::string_view text);

/// One document of a homotopy run.
struct Frame {
  Scalar t;
  CurveMap map;
};
/// {"frames": [{"map": <map document>, "t": "..."}...]}
std::string encode_frames(std::span<const Frame> frames);
/// {"parameters", "reachable"}
std::string encode_reach(bool reachable, const Parameters& parameters);

/// 800x800 SVG plot of the graph over the unit square, 40px margins, y pointing up.
/// Affine pieces are drawn through their exact endpoints; quadratic pieces are
/// sampled at 256 points.
std::string render_svg(std::span<const Piece> pieces);
inline std::string render_svg(const CurveMap& f) { return render_svg(f.pieces()); }

}  // namespace tmap
