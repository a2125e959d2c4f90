// tmap: command-line front end for box maps, deformations, transitivity checks
// and the property suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "tmap/box_map.hpp"
#include "tmap/homotopy.hpp"
#include "tmap/io.hpp"
#include "tmap/space_ops.hpp"
#include "tmap/transitivity.hpp"
#include "tmap/verify.hpp"

namespace {

using namespace tmap;

constexpr int kInputFailure = 1;
constexpr int kSuiteFailure = 2;

std::vector<Scalar> scalar_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Scalar::parse(item));
  if (out.size() != expected)
    throw InputError(std::string(flag) + " expects " + std::to_string(expected) + " comma-separated rationals");
  return out;
}

Interval interval_arg(const std::string& text, const char* flag) {
  const auto v = scalar_list(text, 2, flag);
  return {v[0], v[1]};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::vector<Piece> box_pieces(const BoxMap& m) {
  std::vector<Piece> pieces;
  const auto& v = m.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Scalar slope = (v[i + 1].y - v[i].y) / (v[i + 1].x - v[i].x);
    pieces.emplace_back(Interval(v[i].x, v[i + 1].x), v[i].y - slope * v[i].x, slope);
  }
  return pieces;
}

struct BoxmapArgs {
  std::string interval = "0,1";
  std::string params;
  std::string output;
  std::string svg;
};

int run_boxmap(const BoxmapArgs& a) {
  const auto p = scalar_list(a.params, 5, "--params");
  const BoxMap m = build_box_map(interval_arg(a.interval, "--interval"), BoxParams{p[0], p[1], p[2], p[3], p[4]});
  const auto pieces = box_pieces(m);
  emit(m.domain().is_unit() ? encode_map(m.to_map().map()) : encode_pieces(pieces), a.output);
  if (!a.svg.empty()) emit(render_svg(pieces), a.svg);
  return 0;
}

struct HomotopyArgs {
  std::string map;
  std::string t;
  std::string gamma = "20";
  int frames = 0;
  std::string output;
  std::string svg;
};

int run_homotopy(const HomotopyArgs& a) {
  const CurveMap f = decode_map(read_input(a.map));
  const Scalar t = Scalar::parse(a.t), gamma = Scalar::parse(a.gamma);
  if (a.frames < 0) throw InputError("--frames must be non-negative");
  if (a.frames == 0) {
    const CurveMap h = apply_homotopy(f, t, gamma);
    emit(encode_map(h), a.output);
    if (!a.svg.empty()) emit(render_svg(h), a.svg);
    return 0;
  }
  std::vector<Frame> frames;
  for (int k = 0; k <= a.frames; ++k) {
    const Scalar tk = t * Scalar(k, a.frames);
    frames.push_back({tk, apply_homotopy(f, tk, gamma)});
  }
  emit(encode_frames(frames), a.output);
  return 0;
}

struct CertifyArgs {
  std::string map;
  std::string method = "pipeline";
  int grid_level = 6;
  int n_max = 64;
  std::string u, v;
  int n = 0;
  std::string output;
};

int run_certify(const CertifyArgs& a) {
  const CurveMap f = decode_map(read_input(a.map));
  Parameters params{{"method", a.method}};
  if (a.method == "reach") {
    if (a.u.empty() || a.v.empty() || a.n == 0) throw InputError("method reach requires --u, --v and --n");
    const Interval u = interval_arg(a.u, "--u"), v = interval_arg(a.v, "--v");
    params["u"] = u.lo().str() + "," + u.hi().str();
    params["v"] = v.lo().str() + "," + v.hi().str();
    params["n"] = std::to_string(a.n);
    emit(encode_reach(reach_check(f, u, v, a.n), params), a.output);
    return 0;
  }
  params["grid_level"] = std::to_string(a.grid_level);
  params["n_max"] = std::to_string(a.n_max);
  Verdict verdict;
  if (a.method == "pipeline") verdict = is_transitive_pipeline(f, Budget{a.grid_level, a.n_max});
  else if (a.method == "leo") verdict = leo_certify(PLMap(f), a.grid_level, a.n_max);
  else if (a.method == "refute") verdict = invariant_region_refute(f, a.grid_level, a.n_max);
  else throw InputError("unknown method '" + a.method + "' (pipeline, leo, refute, reach)");
  emit(encode_verdict(verdict, params), a.output);
  return 0;
}

int run_verify(const std::string& suite, const std::string& output) {
  const SuiteReport report = run_suite(suite);
  emit(report.to_json(), output);
  return report.passed() ? 0 : kSuiteFailure;
}

struct MakeArgs {
  std::string name;
  int n = 0;
  std::string value = "1/2";
  std::string output;
};

int run_make(const MakeArgs& a) {
  CurveMap f = CurveMap::identity();
  if (a.name == "identity") f = CurveMap::identity();
  else if (a.name == "square") f = square_map();
  else if (a.name == "sawtooth3") f = sawtooth3().map();
  else if (a.name == "ruette") f = ruette_family(a.n).map();
  else if (a.name == "constant") f = CurveMap::constant(Scalar::parse(a.value));
  else throw InputError("unknown map '" + a.name + "' (identity, square, sawtooth3, ruette, constant)");
  emit(encode_map(f), a.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact box maps, deformations and transitivity certificates on [0,1]"};
  app.require_subcommand(1);

  BoxmapArgs box;
  auto* boxmap = app.add_subcommand("boxmap", "Build the canonical box map on an interval");
  boxmap->add_option("--interval", box.interval, "Domain a,b")->capture_default_str();
  boxmap->add_option("--params", box.params, "left,right,bottom,top,steepness")->required();
  boxmap->add_option("--output,-o", box.output, "Map document path (default: stdout)");
  boxmap->add_option("--svg", box.svg, "Also write an SVG plot");

  HomotopyArgs hom;
  auto* homotopy = app.add_subcommand("homotopy", "Deform a map at time t");
  homotopy->add_option("--map", hom.map, "Map document path, or - for stdin")->required();
  homotopy->add_option("--t", hom.t, "Time in [0,1]")->required();
  homotopy->add_option("--gamma", hom.gamma, "Steepness, at least 20")->capture_default_str();
  homotopy->add_option("--frames", hom.frames, "Emit frames at k t / N for k = 0..N");
  homotopy->add_option("--output,-o", hom.output, "Output path (default: stdout)");
  homotopy->add_option("--svg", hom.svg, "Also write an SVG plot (single frame only)");

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Decide transitivity, or check reachability");
  certify->add_option("--map", cert.map, "Map document path, or - for stdin")->required();
  certify->add_option("--method", cert.method, "pipeline, leo, refute or reach")->capture_default_str();
  certify->add_option("--grid-level", cert.grid_level, "Dyadic grid level")->capture_default_str();
  certify->add_option("--n-max", cert.n_max, "Iteration budget")->capture_default_str();
  certify->add_option("--u", cert.u, "Source interval a,b (reach)");
  certify->add_option("--v", cert.v, "Target interval a,b (reach)");
  certify->add_option("--n", cert.n, "Iterate (reach)");
  certify->add_option("--output,-o", cert.output, "Output path (default: stdout)");

  std::string suite, verify_output;
  auto* verify = app.add_subcommand("verify", "Run a property suite and print its report");
  verify->add_option("suite", suite, "formula2, lemma41, lemma44, extension, sdap or examples")->required();
  verify->add_option("--output,-o", verify_output, "Report path (default: stdout)");

  MakeArgs mk;
  auto* make = app.add_subcommand("make", "Write a named example map");
  make->add_option("name", mk.name, "identity, square, sawtooth3, ruette or constant")->required();
  make->add_option("--n", mk.n, "Size for ruette (at least 5)");
  make->add_option("--value", mk.value, "Value for constant")->capture_default_str();
  make->add_option("--output,-o", mk.output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputFailure;
  }

  try {
    if (*boxmap) return run_boxmap(box);
    if (*homotopy) return run_homotopy(hom);
    if (*certify) return run_certify(cert);
    if (*verify) return run_verify(suite, verify_output);
    if (*make) return run_make(mk);
  } catch (const Error& e) {
    std::cerr << "tmap: " << e.what() << "\n";
    return kInputFailure;
  }
  return kInputFailure;
}
