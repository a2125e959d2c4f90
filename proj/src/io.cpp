#include "tmap/io.hpp"

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <vector>

namespace tmap {
namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json pieces_json(std::span<const Piece> pieces) {
  json out = json::array();
  for (const auto& p : pieces) {
    out.push_back({{"x0", p.domain().lo().str()},
                   {"x1", p.domain().hi().str()},
                   {"c0", p.c0().str()},
                   {"c1", p.c1().str()},
                   {"c2", p.c2().str()}});
  }
  return out;
}

json map_json(const CurveMap& f) { return {{"version", 1}, {"pieces", pieces_json(f.pieces())}}; }

json parameters_json(const Parameters& parameters) {
  json out = json::object();
  for (const auto& [k, v] : parameters) out[k] = v;
  return out;
}

Scalar scalar_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw InputError(std::string("missing string field '") + key + "'");
  return Scalar::parse(it->get<std::string>());
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

CurveMap map_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("map document must be a JSON object");
  const auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || version->get<long>() != 1)
    throw InputError("map document needs \"version\": 1");
  const auto list = doc.find("pieces");
  if (list == doc.end() || !list->is_array()) throw InputError("map document needs a \"pieces\" array");
  try {
    std::vector<Piece> pieces;
    for (const auto& p : *list) {
      if (!p.is_object()) throw InputError("each piece must be an object");
      pieces.emplace_back(Interval(scalar_field(p, "x0"), scalar_field(p, "x1")), scalar_field(p, "c0"),
                          scalar_field(p, "c1"), scalar_field(p, "c2"));
    }
    return CurveMap::from_pieces(std::move(pieces));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("invalid map document: ") + e.what());
  }
}

std::string coordinate(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  return buf.data();
}

}  // namespace

std::string encode_map(const CurveMap& f) { return dump(map_json(f)); }

std::string encode_pieces(std::span<const Piece> pieces) {
  return dump({{"version", 1}, {"pieces", pieces_json(pieces)}});
}

CurveMap decode_map(std::string_view text) { return map_from_json(parse(text)); }

std::string encode_verdict(const Verdict& verdict, const Parameters& parameters) {
  json doc{{"verdict", to_string(verdict.kind)}, {"parameters", parameters_json(parameters)}};
  if (verdict.kind == Verdict::Kind::Refuted) {
    json witness = json::array();
    for (const auto& j : verdict.witness.components()) witness.push_back({j.lo().str(), j.hi().str()});
    doc["witness"] = std::move(witness);
  }
  if (verdict.kind == Verdict::Kind::Inconclusive) doc["budget"] = verdict.budget;
  return dump(doc);
}

VerdictDocument decode_verdict(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("verdict") || !doc["verdict"].is_string())
    throw InputError("verdict document needs a \"verdict\" string");
  VerdictDocument out;
  const auto kind = doc["verdict"].get<std::string>();
  const bool has_witness = doc.contains("witness");
  try {
    if (kind == "certified") {
      out.verdict = Verdict::certified();
    } else if (kind == "refuted") {
      if (!has_witness || !doc["witness"].is_array()) throw InputError("refuted verdict needs a witness");
      IntervalSet w;
      for (const auto& pair : doc["witness"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
          throw InputError("witness entries must be pairs of rational strings");
        w.add(Interval(Scalar::parse(pair[0].get<std::string>()), Scalar::parse(pair[1].get<std::string>())));
      }
      out.verdict = Verdict::refuted(std::move(w));
    } else if (kind == "inconclusive") {
      if (!doc.contains("budget") || !doc["budget"].is_number_integer())
        throw InputError("inconclusive verdict needs an integer budget");
      out.verdict = Verdict::inconclusive(doc["budget"].get<int>());
    } else {
      throw InputError("unknown verdict '" + kind + "'");
    }
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("invalid verdict document: ") + e.what());
  }
  if (kind != "refuted" && has_witness) throw InputError("only refuted verdicts carry a witness");
  if (doc.contains("parameters")) {
    if (!doc["parameters"].is_object()) throw InputError("\"parameters\" must be an object");
    for (const auto& [k, v] : doc["parameters"].items()) {
      if (!v.is_string()) throw InputError("parameter values must be strings");
      out.parameters[k] = v.get<std::string>();
    }
  }
  return out;
}

std::string encode_frames(std::span<const Frame> frames) {
  json list = json::array();
  for (const auto& f : frames) list.push_back({{"t", f.t.str()}, {"map", map_json(f.map)}});
  return dump({{"frames", std::move(list)}});
}

std::string encode_reach(bool reachable, const Parameters& parameters) {
  return dump({{"reachable", reachable}, {"parameters", parameters_json(parameters)}});
}

std::string render_svg(std::span<const Piece> pieces) {
  constexpr int kSize = 800, kMargin = 40, kSamples = 256;
  constexpr double kSpan = kSize - 2 * kMargin;
  auto px = [&](double x) { return coordinate(kMargin + kSpan * x); };
  auto py = [&](double y) { return coordinate(kSize - kMargin - kSpan * y); };

  std::string path;
  auto point = [&](const Scalar& x, const Scalar& y) {
    path += path.empty() ? "M" : " L";
    path += px(x.to_double()) + "," + py(y.to_double());
  };
  for (const auto& p : pieces) {
    const Scalar& a = p.domain().lo();
    const Scalar& b = p.domain().hi();
    if (path.empty()) point(a, p.at(a));
    if (!p.affine()) {
      for (int k = 1; k < kSamples - 1; ++k) {
        const Scalar x = a + (b - a) * Scalar(k, kSamples - 1);
        point(x, p.at(x));
      }
    }
    point(b, p.at(b));
  }

  const std::string lo = coordinate(kMargin), side = coordinate(kSpan);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out += "<rect x=\"" + lo + "\" y=\"" + lo + "\" width=\"" + side + "\" height=\"" + side +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tmap
