#include "tmap/sampling.hpp"

#include <algorithm>
#include <vector>

namespace tmap {

Scalar Sampler::grid(std::uint64_t den) {
  return {static_cast<long>(below(den + 1)), static_cast<long>(den)};
}

Scalar Sampler::unit_fraction_in(const Scalar& lo, const Scalar& hi, std::uint64_t den) {
  return lo + (hi - lo) * grid(den);
}

CurveMap Sampler::pl_map(int laps, std::uint64_t den, std::uint64_t vden) {
  if (laps < 1 || static_cast<std::uint64_t>(laps) > den) throw ParameterError("pl_map: need 1 <= laps <= den");
  std::vector<Scalar> xs{Scalar(0), Scalar(1)};
  while (static_cast<int>(xs.size()) < laps + 1) {
    Scalar x(static_cast<long>(1 + below(den - 1)), static_cast<long>(den));
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Vertex> v;
  v.reserve(xs.size());
  for (auto& x : xs) v.push_back({x, grid(vden)});
  return CurveMap::from_vertices(v);
}

CurveMap Sampler::curve_map(int laps, std::uint64_t den, std::uint64_t vden) {
  const auto skeleton = pl_map(laps, den, vden);
  std::vector<Piece> pieces;
  for (const auto& p : skeleton.pieces()) {
    const Scalar& x0 = p.domain().lo();
    const Scalar& x1 = p.domain().hi();
    const Scalar y0 = p.at(x0), y1 = p.at(x1);
    const Scalar c = below(3) == 0 ? (y0 + y1) / Scalar(2) : grid(vden);
    // B(u) = y0 + 2u(c - y0) + u^2(y0 - 2c + y1), u = (x - x0) / w
    const Scalar w = x1 - x0;
    const Scalar a1 = Scalar(2) * (c - y0) / w;
    const Scalar a2 = (y0 - Scalar(2) * c + y1) / (w * w);
    pieces.emplace_back(p.domain(), y0 - a1 * x0 + a2 * x0 * x0, a1 - Scalar(2) * a2 * x0, a2);
  }
  return CurveMap::from_pieces(std::move(pieces));
}

CurveMap Sampler::lipschitz_map(int knots, const Scalar& lipschitz, const Scalar& lo, const Scalar& hi,
                                std::uint64_t vden) {
  if (knots < 1 || !(lo <= hi) || lipschitz.sign() < 0) throw ParameterError("lipschitz_map: bad parameters");
  const Scalar unit(1, static_cast<long>(vden));
  const Scalar step = lipschitz / Scalar(knots);
  // Values move on the grid 1/vden by at most `step`, rounded down to the grid.
  const long reach = (step / unit).floor().get_si();
  const long low = (lo / unit).ceil().get_si(), high = (hi / unit).floor().get_si();
  if (low > high) throw ParameterError("lipschitz_map: no grid value in range");
  long y = low + static_cast<long>(below(static_cast<std::uint64_t>(high - low + 1)));
  std::vector<Vertex> v;
  v.reserve(static_cast<std::size_t>(knots) + 1);
  v.push_back({Scalar(0), Scalar(y) * unit});
  for (int k = 1; k <= knots; ++k) {
    const long a = std::max(low, y - reach), b = std::min(high, y + reach);
    y = a + static_cast<long>(below(static_cast<std::uint64_t>(b - a + 1)));
    v.push_back({Scalar(k, knots), Scalar(y) * unit});
  }
  return CurveMap::from_vertices(v);
}

Interval Sampler::interval(std::uint64_t den) {
  Scalar a = grid(den), b = grid(den);
  if (b < a) std::swap(a, b);
  if (a == b) {
    const Scalar step(1, static_cast<long>(den));
    if (b < Scalar(1)) b += step;
    else a -= step;
  }
  return {a, b};
}

}  // namespace tmap
