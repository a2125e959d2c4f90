#include "tmap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tmap/box_map.hpp"
#include "tmap/extension.hpp"
#include "tmap/homotopy.hpp"
#include "tmap/sampling.hpp"
#include "tmap/space_ops.hpp"
#include "tmap/transitivity.hpp"

namespace tmap {
namespace {

using Kind = Verdict::Kind;

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }
  void check(std::string name, bool passed, std::string detail) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }
  SuiteReport finish() && {
    std::sort(report_.checks.begin(), report_.checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string padded(int k) {
  std::string s = std::to_string(k);
  return std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

CurveMap pl(std::vector<Vertex> v) { return CurveMap::from_vertices(v); }

/// Full two-branch map through (1/4, a), (1/2, 1), (3/4, b); expanding for a, b in [3/10, 7/10].
CurveMap kink(const Scalar& a, const Scalar& b) {
  return pl({{0, 0}, {Scalar(1, 4), a}, {Scalar(1, 2), 1}, {Scalar(3, 4), b}, {1, 0}});
}

bool invariant_witness(const CurveMap& f, const Verdict& v) {
  return v.kind == Kind::Refuted && !v.witness.is_unit() && v.witness.has_interior() &&
         v.witness.contains(image_set(f, v.witness));
}

PLMap power(const PLMap& f, int n) {
  PLMap out = f;
  for (int i = 1; i < n; ++i) out = compose_pl(out, f);
  return out;
}

Scalar iterate(const CurveMap& f, Scalar x, int n) {
  for (int i = 0; i < n; ++i) x = f(x);
  return x;
}

// ---------------------------------------------------------------- box heights

SuiteReport box_heights() {
  Recorder r("formula2");
  Sampler rng(2002);
  struct Tally {
    long instances = 0, boxes = 0, violations = 0;
  };
  Tally pl_tally, quad_tally;
  long joined = 0, joined_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const bool quadratic = trial % 2 == 1;
    const int laps = 1 + static_cast<int>(rng.below(6));
    const CurveMap f = quadratic ? rng.curve_map(laps) : rng.pl_map(laps);
    Scalar t = rng.below(2) == 0 ? Scalar(1, static_cast<long>(1 + rng.below(64)))
                                 : Scalar(static_cast<long>(1 + rng.below(97)), 97);
    const Scalar gamma = Scalar(20) + Scalar(static_cast<long>(rng.below(161)), 2);
    Tally& tally = quadratic ? quad_tally : pl_tally;
    ++tally.instances;
    const auto boxes = box_data(f, t, gamma);
    for (const auto& b : boxes) {
      ++tally.boxes;
      bool ok = b.cell.length() <= b.params.height();
      try {
        b.params.validate();
      } catch (const ParameterError&) {
        ok = false;
      }
      if (!ok) ++tally.violations;
    }
    // Every tenth instance: the joined map sweeps each box exactly on its cell.
    if (trial % 10 == 0) {
      ++joined;
      const CurveMap h = apply_homotopy(f, t, gamma);
      for (const auto& b : boxes)
        if (!(range_on(h, b.cell) == b.target())) {
          ++joined_bad;
          break;
        }
    }
  }
  auto report = [&](const char* name, const Tally& t) {
    r.check(cat("formula2/", name), t.violations == 0 && t.instances > 0,
            cat(t.instances, " instances, ", t.boxes, " boxes, ", t.violations, " with |cell| > |box| or invalid params"));
  };
  report("pl", pl_tally);
  report("quadratic", quad_tally);
  r.check("formula2/joined_surjects_on_boxes", joined_bad == 0,
          cat(joined, " joined maps, ", joined_bad, " with a cell image differing from its box"));
  return std::move(r).finish();
}

// ---------------------------------------------------------------- shared family boxes

SuiteReport family_boxes() {
  Recorder r("lemma41");
  Sampler rng(4141);
  for (int fam = 0; fam < 20; ++fam) {
    std::vector<CurveMap> family;
    const int size = 2 + static_cast<int>(rng.below(4));
    for (int k = 0; k < size; ++k) {
      const Scalar lipschitz(static_cast<long>(1 + rng.below(4)));
      family.push_back(rng.lipschitz_map(8 + static_cast<int>(rng.below(25)), lipschitz, 0, 1));
    }
    const Scalar diam = sampled_diameter(family);
    for (const Scalar& eps : {Scalar(1, 10), Scalar(1, 100)}) {
      const FamilyBounds bounds = family_box_bounds(family, eps);
      const Scalar& t0 = bounds.step();
      Scalar worst(0);
      long cells = 0, violations = 0;
      for (const Scalar& t : {t0, t0 / Scalar(2), t0 / Scalar(4)}) {
        for (const auto& j : bounds.bounds(t)) {
          ++cells;
          worst = max(worst, j.length());
          if (diam + eps < j.length()) ++violations;
        }
      }
      r.check(cat("lemma41/family", padded(fam), "/eps=", eps), violations == 0,
              cat("size ", size, ", diam ", diam, ", t0 ", t0, ", ", cells, " cells, widest box ", worst,
                  " <= diam + eps = ", diam + eps));
    }
  }
  return std::move(r).finish();
}

// ---------------------------------------------------------------- deformation near perturbed maps

SuiteReport perturbed_deformation() {
  Recorder r("lemma44");
  Sampler rng(4444);
  const Scalar eps(28, 100);
  const Scalar bump(1, 128);
  for (int m = 0; m < 20; ++m) {
    const CurveMap f = rng.lipschitz_map(16, Scalar(2), Scalar(1, 8), Scalar(7, 8));
    const LocalDelta ld = local_delta(f, eps);
    const Scalar limit = Scalar(27) * ld.radius;
    // Offsets at the knots k/8: all up, all down, alternating, and one random pattern.
    std::vector<std::vector<int>> patterns{std::vector<int>(9, 1), std::vector<int>(9, -1), {}, {}};
    for (int k = 0; k <= 8; ++k) patterns[2].push_back(k % 2 == 0 ? 1 : -1);
    for (int k = 0; k <= 8; ++k) patterns[3].push_back(rng.below(2) == 0 ? 1 : -1);
    Scalar worst(0), worst_offset(0);
    long runs = 0, violations = 0;
    for (const auto& signs : patterns) {
      std::vector<Vertex> v;
      for (int k = 0; k <= 16; ++k) {
        const Scalar x(k, 16);
        // Offset interpolated linearly between the knots k/8.
        const Scalar a = bump * Scalar(signs[static_cast<std::size_t>(k / 2)]);
        const Scalar b = bump * Scalar(signs[static_cast<std::size_t>(std::min(8, (k + 1) / 2))]);
        v.push_back({x, f(x) + (a + b) / Scalar(2)});
      }
      const CurveMap g = pl(std::move(v));
      worst_offset = max(worst_offset, sup_distance(f, g));
      for (const Scalar& t : {ld.step, ld.step / Scalar(2)})
        for (int gamma : {20, 30, 100}) {
          ++runs;
          const Scalar d = sup_distance(g, apply_homotopy(g, t, Scalar(gamma)));
          worst = max(worst, d);
          if (!(d < limit)) ++violations;
        }
    }
    const bool offsets_ok = worst_offset < ld.radius;
    r.check(cat("lemma44/map", padded(m)), violations == 0 && offsets_ok,
            cat("t_f ", ld.step, ", eta ", ld.radius, ", max |g - f| ", worst_offset, ", ", runs,
                " runs, max |g - H(g,t)| ", worst, " < 27 eta = ", limit));
  }
  return std::move(r).finish();
}

// ---------------------------------------------------------------- extension

struct PairInstance {
  const char* name;
  CurveMap first;
  CurveMap second;
};

void check_pair(Recorder& r, const PairInstance& inst) {
  const Scalar eps(1, 2);
  const std::vector<Barycentric> ends{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  const BoundaryMap phi = convex_boundary_map({inst.first, inst.second}, ends);
  const Extension e = sc_extend(phi, 1, eps);
  const Scalar& t0 = e.step();
  std::vector<Scalar> heights{Scalar(0), t0 / Scalar(4), t0 / Scalar(2), t0};
  for (int k = 1; k <= 28; ++k) heights.push_back(t0 + (Scalar(1) - t0) * Scalar(k, 28));

  std::vector<CurveMap> images{inst.first, inst.second};
  long probes = 0, certified = 0, positive = 0;
  for (const auto& x : ends)
    for (const auto& t : heights) {
      ++probes;
      images.push_back(e.at(x, t));
      if (t.sign() > 0) {
        ++positive;
        if (is_transitive_pipeline(images.back()).kind == Kind::Certified) ++certified;
      }
    }
  const Scalar diam_a = sup_distance(inst.first, inst.second);
  const Scalar diam = sampled_diameter(images);
  const std::string base = cat("extension/sc/", inst.name);
  r.check(base + "/diameter", diam <= (Scalar(1) + eps) * diam_a && probes >= 64,
          cat(probes, " probes, t0 ", t0, ", diam(images u A) ", diam, " <= (1 + eps) diam A = ",
              (Scalar(1) + eps) * diam_a));
  const CurveMap apex = e.at(ends[0], Scalar(1));
  const bool apex_ok = apex == e.at(ends[1], Scalar(1)) && apex == e(Barycentric{Scalar(1, 2), Scalar(1, 2)});
  r.check(base + "/apex", apex_ok, apex_ok ? "apex value independent of the boundary point" : "apex values differ");
  r.check(base + "/transitive", certified == positive,
          cat(certified, " of ", positive, " probe images with t > 0 certified"));
}

void check_complex(Recorder& r) {
  ComplexSpec spec;
  spec.complex = {3, {{0, 1, 2}}};
  spec.vertex_maps = {kink(Scalar(3, 10), Scalar(3, 10)), kink(Scalar(7, 10), Scalar(1, 2)),
                      kink(Scalar(1, 2), Scalar(7, 10))};
  for (const std::vector<int>& edge : {std::vector<int>{0, 1}, {0, 2}, {1, 2}}) {
    std::vector<CurveMap> ends{spec.vertex_maps[static_cast<std::size_t>(edge[0])],
                               spec.vertex_maps[static_cast<std::size_t>(edge[1])]};
    spec.given[edge] = convex_boundary_map(ends, {}).evaluator;
  }
  const std::vector<int> face{0, 1, 2};
  const ComplexExtension ext = complex_extend(spec);
  const Extension& e = ext.extension_of(face);

  // diam of the given map on the boundary of the triangle, from a boundary grid.
  std::vector<CurveMap> rim;
  bool rim_ok = true;
  for (const auto& p : boundary_grid(2, 8)) {
    rim.push_back(ext(face, p));
    // On the boundary the extension agrees with the given edge map.
    std::vector<int> edge;
    Barycentric q;
    for (int k = 0; k < 3; ++k)
      if (p[static_cast<std::size_t>(k)].sign() > 0) edge.push_back(k), q.push_back(p[static_cast<std::size_t>(k)]);
    if (edge.size() == 2) rim_ok = rim_ok && rim.back() == spec.given[edge](q);
  }
  const Scalar rim_diam = sampled_diameter(rim);
  r.check("extension/complex/boundary", rim_ok && ext.missing().size() == 1,
          cat(rim.size(), " boundary probes agree with the given edge maps"));

  // Rigorous upper bound on the diameter of the probe images: the hull of each
  // probe's boxes over the cells of the switch-over partition.
  std::vector<Scalar> cuts;
  for (const auto& c : partition(e.step()).cells) cuts.push_back(c.lo());
  cuts.push_back(Scalar(1));
  Envelope env(std::move(cuts));
  const auto grid = simplex_grid(2, 44);
  for (const auto& p : grid) {
    const ConePoint c = to_cone(p);
    if (c.t.is_zero()) env.add(ext(face, p));
    else env.add(e.boxes_at(c.boundary, c.t));
  }
  const Scalar bound = env.diameter_bound();
  r.check("extension/complex/diameter", bound <= Scalar(2) * rim_diam && env.members() >= 1000,
          cat(env.members(), " probes, t0 ", e.step(), ", diam bound ", bound, " <= 2 diam phi(boundary) = ",
              Scalar(2) * rim_diam));

  const auto rim_points = boundary_grid(2, 4);
  const CurveMap apex = e.at(rim_points.front(), Scalar(1));
  bool apex_ok = apex == ext(face, Barycentric{Scalar(1, 3), Scalar(1, 3), Scalar(1, 3)});
  for (const auto& x : rim_points) apex_ok = apex_ok && e.at(x, Scalar(1)) == apex;
  r.check("extension/complex/apex", apex_ok,
          cat(rim_points.size(), apex_ok ? " boundary points give the same apex value" : " boundary points, apex differs"));

  // Transitivity on a fixed subsample of interior probes: every 131st grid point.
  long tested = 0, certified = 0;
  for (std::size_t k = 0; k < grid.size(); k += 131) {
    if (to_cone(grid[k]).t.is_zero()) continue;
    ++tested;
    if (is_transitive_pipeline(ext(face, grid[k])).kind == Kind::Certified) ++certified;
  }
  r.check("extension/complex/transitive", tested > 0 && certified == tested,
          cat(certified, " of ", tested, " sampled interior probe images certified"));
}

SuiteReport extension() {
  Recorder r("extension");
  const CurveMap saw = sawtooth3().map();
  const CurveMap k0 = kink(Scalar(3, 10), Scalar(3, 10)), k1 = kink(Scalar(7, 10), Scalar(1, 2)),
                 k2 = kink(Scalar(1, 2), Scalar(7, 10));
  const std::vector<PairInstance> pairs{{"sawtooth_reflected", saw, reflect_values(saw)},
                                        {"kink_a", k0, k1},
                                        {"kink_b", k1, k2},
                                        {"kink_c", k0, k2},
                                        {"ruette_sawtooth", ruette_family(5).map(), saw}};
  for (const auto& inst : pairs) check_pair(r, inst);
  check_complex(r);
  return std::move(r).finish();
}

// ---------------------------------------------------------------- discretized families

// Pairwise separation and per-map slope floors; with `unit_amplitude` each output must also
// sweep a full unit of height over [0, t_j].
void check_family(Recorder& r, const std::string& base, const std::vector<std::pair<CurveMap, Scalar>>& family,
                  bool unit_amplitude) {
  const auto out = sdap_discretize(family);
  Scalar closest(1);
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b) closest = min(closest, sup_distance(out[a], out[b]));
  r.check(base + "/separated", closest.sign() > 0, cat("smallest pairwise distance ", closest));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Scalar floor = PLMap(out[j]).slope_floor();
    const Scalar want(20 + static_cast<long>(j) + 1);
    const Interval start(0, family[j].second);
    const Scalar amp = amplitude(out[j], start);
    r.check(cat(base, "/map", j + 1), want <= floor && (!unit_amplitude || amp == Scalar(1)),
            cat("min |slope| ", floor, " >= ", want, ", amplitude on [0, t] ", amp));
  }
}

SuiteReport sdap() {
  Recorder r("sdap");
  const std::vector<std::pair<CurveMap, Scalar>> copies(3, {CurveMap::identity(), Scalar(1)});
  check_family(r, "sdap/identity", copies, true);
  Sampler rng(1212);
  std::vector<std::pair<CurveMap, Scalar>> mixed;
  for (int j = 0; j < 3; ++j) mixed.emplace_back(rng.pl_map(3), Scalar(1, static_cast<long>(2 + rng.below(8))));
  check_family(r, "sdap/random", mixed, false);
  return std::move(r).finish();
}

// ---------------------------------------------------------------- examples

void reference_box(Recorder& r) {
  const BoxParams params{Scalar(3, 20), Scalar(1, 10), Scalar(0), Scalar(1, 5), Scalar(20)};
  const auto start = std::chrono::steady_clock::now();
  const BoxMap m = build_box_map(Interval::unit(), params);
  const bool fast = std::chrono::steady_clock::now() - start < std::chrono::seconds(1);
  r.check("reference_box/time", fast, "built within the 1 s limit");
  bool slopes = true;
  for (std::size_t i = 0; i + 1 < m.vertices().size(); ++i) {
    const auto& a = m.vertices()[i];
    const auto& b = m.vertices()[i + 1];
    slopes = slopes && abs((b.y - a.y) / (b.x - a.x)) == Scalar(4);
  }
  r.check("reference_box/slope", slopes && m.slope() == Scalar(4), cat(m.laps(), " laps, |slope| ", m.slope()));
  r.check("reference_box/endpoints", m.eval(0) == Scalar(3, 20) && m.eval(1) == Scalar(1, 10),
          cat("f(0) = ", m.eval(0), ", f(1) = ", m.eval(1)));
  r.check("reference_box/image", m.image() == Interval(0, Scalar(1, 5)), cat("image ", m.image()));
  r.check("reference_box/variation", m.total_variation() == Scalar(4), cat("total variation ", m.total_variation()));
}

void homotopy_identity(Recorder& r) {
  Sampler rng(303);
  std::vector<CurveMap> corpus;
  for (int k = 0; k < 50; ++k) {
    const int laps = 1 + static_cast<int>(rng.below(6));
    corpus.push_back(k % 2 == 0 ? rng.pl_map(laps) : rng.curve_map(laps));
  }
  long zero_bad = 0, junctions = 0, junction_bad = 0;
  for (const auto& f : corpus)
    for (int gamma : {20, 25, 100}) {
      if (!sup_distance(f, apply_homotopy(f, 0, Scalar(gamma))).is_zero()) ++zero_bad;
      for (const Scalar& t : {Scalar(1, 3), Scalar(1, 8), Scalar(3, 16)}) {
        const CurveMap h = apply_homotopy(f, t, Scalar(gamma));
        for (const auto& cell : partition(t).cells)
          for (const Scalar* x : {&cell.lo(), &cell.hi()}) {
            ++junctions;
            if (h(*x) != f(*x)) ++junction_bad;
          }
      }
    }
  r.check("homotopy_identity/at_zero", zero_bad == 0,
          cat(corpus.size(), " maps x 3 steepness values, ", zero_bad, " with d(f, H(f,0)) > 0"));
  r.check("homotopy_identity/junctions", junction_bad == 0,
          cat(junctions, " junction evaluations, ", junction_bad, " mismatches"));
}

void transitivity(Recorder& r) {
  for (int n = 5; n <= 12; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = is_transitive_pipeline(ruette_family(n).map());
    const auto elapsed = std::chrono::steady_clock::now() - start;
    r.check(cat("transitivity/ruette", padded(n)), v.kind == Kind::Certified && elapsed < std::chrono::seconds(10),
            cat("verdict ", to_string(v.kind), " within the 10 s limit"));
  }
  Sampler rng(606);
  for (int k = 0; k < 10; ++k) {
    const CurveMap f = rng.pl_map(1 + static_cast<int>(rng.below(6)));
    const Verdict v = is_transitive_pipeline(apply_homotopy(f, Scalar(1, 4), Scalar(20)));
    r.check(cat("transitivity/homotopy", padded(k)), v.kind == Kind::Certified,
            cat("H(f, 1/4) with ", f.size(), "-piece f: ", to_string(v.kind)));
  }
  for (const auto& [name, f] : {std::pair<const char*, CurveMap>{"identity", CurveMap::identity()},
                                {"square", square_map()}}) {
    const Verdict v = is_transitive_pipeline(f);
    std::ostringstream w;
    w << v.witness;
    r.check(cat("transitivity/", name), invariant_witness(f, v),
            cat("verdict ", to_string(v.kind), ", witness ", w.str(), " maps into itself"));
  }
}

void ball(Recorder& r) {
  const Scalar rho(1, 100);
  const CurveMap f = square_map();
  const auto w = ball_refute(f, rho, 6);
  bool ok = w.has_value() && w->margin.sign() > 0;
  if (ok) {
    const Interval img = range_on(f, w->region);
    const Interval grown(max(Scalar(0), img.lo() - rho), min(Scalar(1), img.hi() + rho));
    ok = w->region.contains(grown) && !w->region.is_unit();
  }
  std::ostringstream region;
  if (w) region << w->region;
  r.check("ball/square_witness", ok,
          w ? cat("region ", region.str(), " holds its rho-thickened image, margin ", w->margin) : "no witness");
  // Slack on [0,1/3]: 1/3 - (max f([0,1/3]) + rho), with the image maximum taken from f directly.
  const Interval j(0, Scalar(1, 3));
  const Scalar expected = j.hi() - (f(j.hi()) + rho);
  const Scalar margin = ball_margin(f, j, rho);
  r.check("ball/third_margin", margin == expected && margin == Scalar(191, 900), cat("margin ", margin));
  // Maps within rho of f on a grid keep the witness region invariant.
  Sampler rng(707);
  long tried = 0, broken = 0;
  if (w) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Vertex> v;
      for (int i = 0; i <= 16; ++i) {
        const Scalar x(i, 16);
        const Scalar y = x * x + rho * Scalar(static_cast<long>(rng.below(5)) - 2, 2);
        v.push_back({x, min(Scalar(1), max(Scalar(0), y))});
      }
      const CurveMap g = pl(std::move(v));
      if (!(sup_distance(g, f) <= rho)) continue;
      ++tried;
      if (!w->region.contains(range_on(g, w->region))) ++broken;
    }
  }
  r.check("ball/perturbations", w && tried > 0 && broken == 0,
          cat(tried, " maps within rho, ", broken, " leaving the witness region"));
}

void convergence(Recorder& r) {
  Scalar previous(2);
  long bound_bad = 0, order_bad = 0;
  for (int n = 5; n <= 50; ++n) {
    const Scalar d = sup_distance(ruette_family(n).map(), CurveMap::identity());
    if (Scalar(3, n) < d) ++bound_bad;
    if (!(d < previous)) ++order_bad;
    previous = d;
  }
  r.check("convergence/bound", bound_bad == 0, cat("n = 5..50, ", bound_bad, " with d > 3/n"));
  r.check("convergence/decreasing", order_bad == 0, cat(order_bad, " non-decreasing steps"));
}

void perturbation(Recorder& r) {
  const std::vector<std::tuple<const char*, PLMap, Scalar>> seeds{
      {"sawtooth3", sawtooth3(), Scalar(1, 10)},
      {"ruette5", ruette_family(5), Scalar(1, 10)},
      {"kink", PLMap(kink(Scalar(3, 10), Scalar(3, 10))), Scalar(1, 20)},
      {"rise_then_flat", PLMap(pl({{0, 0}, {Scalar(1, 4), 1}, {1, 1}})), Scalar(1, 5)},
      {"flat_then_rise", PLMap(pl({{0, 0}, {Scalar(3, 4), 0}, {1, 1}})), Scalar(1, 5)}};
  for (const auto& [name, g, eps] : seeds) {
    const Perturbation p = nowhere_dense_perturbation(g, eps);
    const Scalar d = sup_distance(g.map(), p.map);
    const bool ok = d < eps && is_surjective(p.map) && p.verdict.kind == Kind::Refuted &&
                    invariant_witness(p.map, p.verdict) && range_on(p.map, p.trap) == p.trap;
    std::ostringstream ball;
    if (p.ball) ball << "ball witness " << p.ball->region << " margin " << p.ball->margin;
    else ball << "no ball witness";
    r.check(cat("perturbation/", name), ok,
            cat("d(g,h) ", d, " < ", eps, ", verdict ", to_string(p.verdict.kind), ", ", ball.str(), " at radius ",
                p.ball_radius));
  }
}

// A point of U that the n-th iterate sends into V, found on the exact composite
// and confirmed by direct iteration.
bool explicit_reach(const PLMap& f, const Interval& u, const Interval& v, int n) {
  const PLMap fn = power(f, n);
  for (const auto& piece : fn.map().pieces()) {
    const auto dom = piece.domain().intersection(u);
    if (!dom) continue;
    const auto hit = piece.range_on(*dom).intersection(v);
    if (!hit) continue;
    const Scalar y = hit->midpoint();
    const Scalar x = piece.c1().is_zero() ? dom->lo() : (y - piece.c0()) / piece.c1();
    if (dom->contains(x) && v.contains(iterate(f.map(), x, n))) return true;
  }
  return false;
}

bool sampled_reach(const CurveMap& f, const Interval& u, const Interval& v, int n, int points) {
  for (int k = 0; k <= points; ++k)
    if (v.contains(iterate(f, u.lo() + u.length() * Scalar(k, points), n))) return true;
  return false;
}

void reach_oracle(Recorder& r) {
  Sampler rng(1111);
  struct Tally {
    long sampled = 0, refined = 0, unresolved = 0, unsound = 0;
  };
  // The fine sampler is the oracle; the coarse one misses many hits and so exercises refinement.
  Tally fine, coarse;
  long positives = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PLMap f(rng.pl_map(1 + static_cast<int>(rng.below(5)), 32, 32));
    const Interval u = rng.interval(16), v = rng.interval(16);
    const int n = 1 + static_cast<int>(rng.below(3));
    const bool exact = reach_check(f.map(), u, v, n);
    positives += exact;
    for (auto [tally, points] : {std::pair<Tally*, int>{&fine, 10000}, {&coarse, 8}}) {
      const bool sampled = sampled_reach(f.map(), u, v, n, points);
      tally->sampled += sampled;
      if (sampled && !exact) ++tally->unsound;
      if (exact && !sampled) ++(explicit_reach(f, u, v, n) ? tally->refined : tally->unresolved);
    }
  }
  auto detail = [&](const Tally& t, int points) {
    return cat("100 maps, ", points + 1, " sample points: ", positives, " exact positives, ", t.sampled,
               " sampled positives, ", t.refined, " exact-only positives confirmed by an explicit point, ",
               t.unresolved, " unresolved, ", t.unsound, " sampled-only positives");
  };
  r.check("reach_oracle/agreement", fine.unsound == 0 && fine.unresolved == 0, detail(fine, 10000));
  r.check("reach_oracle/refinement", coarse.unsound == 0 && coarse.unresolved == 0 && coarse.refined > 0,
          detail(coarse, 8));
}

SuiteReport examples() {
  Recorder r("examples");
  reference_box(r);
  homotopy_identity(r);
  transitivity(r);
  ball(r);
  convergence(r);
  perturbation(r);
  reach_oracle(r);
  return std::move(r).finish();
}

}  // namespace

bool SuiteReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string SuiteReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return nlohmann::json{{"suite", suite}, {"passed", passed()}, {"checks", std::move(list)}}.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formula2", "lemma41", "lemma44", "extension", "sdap", "examples"};
  return names;
}

SuiteReport run_suite(std::string_view name) {
  static const std::vector<std::pair<std::string_view, std::function<SuiteReport()>>> suites{
      {"formula2", box_heights}, {"lemma41", family_boxes}, {"lemma44", perturbed_deformation},
      {"extension", extension}, {"sdap", sdap},       {"examples", examples}};
  for (const auto& [n, run] : suites)
    if (n == name) return run();
  throw InputError("unknown suite '" + std::string(name) + "'");
}

}  // namespace tmap
