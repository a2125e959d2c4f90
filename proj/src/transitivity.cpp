#include "tmap/transitivity.hpp"

#include <algorithm>
#include <set>

#include "tmap/errors.hpp"

namespace tmap {
namespace {

void check_budget(int grid_level, int n_max) {
  if (grid_level < 1 || grid_level > 30)
    throw ParameterError("grid level " + std::to_string(grid_level) + " outside [1,30]");
  if (n_max < 1) throw ParameterError("iteration budget must be at least 1");
}

std::vector<Scalar> dyadic_points(int grid_level) {
  const long cells = 1L << grid_level;
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(cells) + 1);
  for (long k = 0; k <= cells; ++k) out.emplace_back(k, cells);
  return out;
}

// Smallest interval with endpoints in `grid` (sorted, containing 0 and 1) that contains j.
Interval round_out(const Interval& j, const std::vector<Scalar>& grid) {
  auto lo = std::upper_bound(grid.begin(), grid.end(), j.lo());
  auto hi = std::lower_bound(grid.begin(), grid.end(), j.hi());
  return {*std::prev(lo), *hi};
}

}  // namespace

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Certified: return "certified";
    case Verdict::Kind::Refuted: return "refuted";
    case Verdict::Kind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool reach_check(const CurveMap& f, const Interval& u, const Interval& v, int n) {
  if (n < 1) throw ParameterError("reach_check needs n >= 1");
  if (u.degenerate() || v.degenerate()) throw DomainError("reach_check needs non-degenerate intervals");
  Interval w = u;
  for (int i = 0; i < n; ++i) w = f.range_on(w);
  return w.intersects(v);
}

Verdict leo_certify(const PLMap& f, int grid_level, int n_max) {
  check_budget(grid_level, n_max);
  const Scalar floor = f.slope_floor();
  if (!(Scalar(2) < floor))
    throw PreconditionError("slope floor " + floor.str() + " does not exceed 2");

  const CurveMap& m = f.map();
  const Scalar short_lap = Scalar(2) * dyadic(static_cast<unsigned>(grid_level));
  // Distinct cells with the same current image behave identically from here on,
  // so only distinct images are tracked. The first step is taken directly.
  std::set<Interval> frontier;
  auto track = [&frontier](Interval img) {
    if (!img.is_unit()) frontier.insert(std::move(img));
  };
  const auto grid = dyadic_points(grid_level);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) track(m.range_on(Interval(grid[k], grid[k + 1])));
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.pieces()[i].domain().length() < short_lap) track(m.piece_range(i));

  for (int step = 1; step < n_max && !frontier.empty(); ++step) {
    std::set<Interval> next;
    for (const auto& w : frontier) {
      Interval img = m.range_on(w);
      if (!img.is_unit()) next.insert(std::move(img));
    }
    frontier = std::move(next);
  }
  return frontier.empty() ? Verdict::certified() : Verdict::inconclusive(n_max);
}

Verdict invariant_region_refute(const CurveMap& f, int grid_level, int n_max) {
  check_budget(grid_level, n_max);
  std::vector<Scalar> grid = dyadic_points(grid_level);
  std::vector<Interval> seeds;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) seeds.emplace_back(grid[k], grid[k + 1]);
  for (const auto& p : f.pieces())
    if (!p.domain().is_unit()) seeds.push_back(p.domain());
  const auto bps = f.breakpoints();
  grid.insert(grid.end(), bps.begin(), bps.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  for (const auto& seed : seeds) {
    IntervalSet c(seed);
    for (int step = 0; step < n_max; ++step) {
      std::vector<Interval> parts(c.components().begin(), c.components().end());
      for (const auto& comp : c.components()) parts.push_back(round_out(f.range_on(comp), grid));
      IntervalSet grown(std::move(parts));
      if (grown == c) {
        if (!c.contains(f.image(c))) throw InternalError("rounded invariant set fails the exact check");
        return Verdict::refuted(std::move(c));
      }
      if (grown.is_unit()) break;
      c = std::move(grown);
    }
  }
  return Verdict::inconclusive(n_max);
}

Scalar ball_margin(const CurveMap& f, const Interval& j, const Scalar& rho) {
  if (j.is_unit()) throw DomainError("ball_margin needs a proper interval");
  const Interval img = f.range_on(j);
  std::optional<Scalar> margin;
  auto take = [&](Scalar slack) { margin = margin ? min(*margin, slack) : slack; };
  if (j.lo().sign() > 0) take(img.lo() - rho - j.lo());
  if (j.hi() < Scalar(1)) take(j.hi() - (img.hi() + rho));
  return *margin;
}

std::optional<BallWitness> ball_refute(const CurveMap& f, const Scalar& rho, int grid_level) {
  if (rho.sign() <= 0) throw ParameterError("ball radius must be positive");
  check_budget(grid_level, 1);
  const auto grid = dyadic_points(grid_level);
  std::optional<BallWitness> best;
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      const Interval j(grid[a], grid[b]);
      if (j.is_unit()) continue;
      Scalar m = ball_margin(f, j, rho);
      if (m.sign() > 0 && (!best || best->margin < m)) best = BallWitness{j, std::move(m)};
    }
  return best;
}

Verdict is_transitive_pipeline(const CurveMap& f, const Budget& budget) {
  check_budget(budget.grid_level, budget.n_max);
  if (f.is_pl()) {
    const PLMap g(f);
    if (Scalar(2) < g.slope_floor()) {
      Verdict v = leo_certify(g, budget.grid_level, budget.n_max);
      if (v.kind == Verdict::Kind::Certified) return v;
    }
  }
  return invariant_region_refute(f, budget.grid_level, budget.n_max);
}

}  // namespace tmap
