// Python bindings. Exact rationals cross the boundary as fractions.Fraction;
// ints and strings such as "3/20" are accepted wherever a rational is expected.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "tmap/box_map.hpp"
#include "tmap/homotopy.hpp"
#include "tmap/io.hpp"
#include "tmap/space_ops.hpp"
#include "tmap/transitivity.hpp"
#include "tmap/verify.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<tmap::Scalar> {
  PYBIND11_TYPE_CASTER(tmap::Scalar, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = tmap::Scalar::parse(src.cast<std::string>());
      } else if (py::isinstance<py::int_>(src) && !py::isinstance<py::bool_>(src)) {
        value = tmap::Scalar::parse(py::str(src).cast<std::string>());
      } else if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !py::isinstance<py::float_>(src)) {
        const std::string num = py::str(src.attr("numerator")), den = py::str(src.attr("denominator"));
        value = tmap::Scalar::parse(num + "/" + den);
      } else {
        return false;
      }
    } catch (const tmap::Error&) {
      return false;
    }
    return true;
  }

  static handle cast(const tmap::Scalar& s, return_value_policy, handle) {
    return py::module_::import("fractions").attr("Fraction")(s.str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace tmap;

using Pair = std::pair<Scalar, Scalar>;

Interval to_interval(const Pair& p) { return {p.first, p.second}; }
Pair from_interval(const Interval& j) { return {j.lo(), j.hi()}; }

std::vector<Pair> witness_list(const IntervalSet& s) {
  std::vector<Pair> out;
  for (const auto& j : s.components()) out.push_back(from_interval(j));
  return out;
}

py::dict piece_dict(const Piece& p) {
  py::dict d;
  d["x0"] = p.domain().lo();
  d["x1"] = p.domain().hi();
  d["c0"] = p.c0();
  d["c1"] = p.c1();
  d["c2"] = p.c2();
  return d;
}

}  // namespace

PYBIND11_MODULE(tmap, m) {
  m.doc() = "Exact box maps, deformations and transitivity certificates for self-maps of [0,1]";

  // Translators registered later are tried first, so the base class goes first.
  const auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<InternalError>(m, "InternalError", error.ptr());

  py::class_<CurveMap>(m, "CurveMap", "Continuous piecewise polynomial (degree <= 2) self-map of [0,1].")
      .def_static(
          "from_vertices",
          [](const std::vector<Pair>& vertices) {
            std::vector<Vertex> v;
            for (const auto& [x, y] : vertices) v.push_back({x, y});
            return CurveMap::from_vertices(v);
          },
          py::arg("vertices"), "Piecewise linear interpolation through (x, y) pairs from x = 0 to x = 1.")
      .def_static(
          "from_pieces",
          [](const std::vector<py::dict>& pieces) {
            std::vector<Piece> out;
            for (const auto& d : pieces) {
              const Scalar c2 = d.contains("c2") ? d["c2"].cast<Scalar>() : Scalar(0);
              out.emplace_back(Interval(d["x0"].cast<Scalar>(), d["x1"].cast<Scalar>()), d["c0"].cast<Scalar>(),
                               d["c1"].cast<Scalar>(), c2);
            }
            return CurveMap::from_pieces(std::move(out));
          },
          py::arg("pieces"), "Pieces given as dicts with x0, x1, c0, c1 and optional c2.")
      .def_static("identity", &CurveMap::identity)
      .def_static("constant", &CurveMap::constant, py::arg("value"))
      .def_static("from_json", [](const std::string& text) { return decode_map(text); }, py::arg("text"))
      .def("to_json", [](const CurveMap& f) { return encode_map(f); })
      .def("to_svg", [](const CurveMap& f) { return render_svg(f); })
      .def("__call__", &CurveMap::eval, py::arg("x"))
      .def("range_on", [](const CurveMap& f, const Pair& j) { return from_interval(f.range_on(to_interval(j))); },
           py::arg("interval"))
      .def("breakpoints", &CurveMap::breakpoints)
      .def("is_pl", &CurveMap::is_pl)
      .def_property_readonly("pieces",
                             [](const CurveMap& f) {
                               py::list out;
                               for (const auto& p : f.pieces()) out.append(piece_dict(p));
                               return out;
                             })
      .def("__len__", &CurveMap::size)
      .def("__eq__", [](const CurveMap& a, const CurveMap& b) { return a == b; })
      .def("__repr__", [](const CurveMap& f) { return "<CurveMap with " + std::to_string(f.size()) + " pieces>"; });

  py::class_<BoxMap>(m, "BoxMap")
      .def_property_readonly("domain", [](const BoxMap& b) { return from_interval(b.domain()); })
      .def_property_readonly("vertices",
                             [](const BoxMap& b) {
                               std::vector<Pair> out;
                               for (const auto& v : b.vertices()) out.emplace_back(v.x, v.y);
                               return out;
                             })
      .def_property_readonly("slope", &BoxMap::slope)
      .def_property_readonly("laps", &BoxMap::laps)
      .def_property_readonly("image", [](const BoxMap& b) { return from_interval(b.image()); })
      .def("total_variation", &BoxMap::total_variation)
      .def("__call__", &BoxMap::eval, py::arg("x"))
      .def("to_map", [](const BoxMap& b) { return b.to_map().map(); });

  m.def(
      "build_box_map",
      [](const Pair& domain, const Scalar& left, const Scalar& right, const Scalar& bottom, const Scalar& top,
         const Scalar& steepness) { return build_box_map(to_interval(domain), {left, right, bottom, top, steepness}); },
      py::arg("domain"), py::arg("left"), py::arg("right"), py::arg("bottom"), py::arg("top"),
      py::arg("steepness") = Scalar(20));
  m.def("apply_homotopy", &apply_homotopy, py::arg("f"), py::arg("t"), py::arg("steepness") = Scalar(20));
  m.def(
      "sup_distance", [](const CurveMap& f, const CurveMap& g) { return sup_distance(f, g); }, py::arg("f"),
      py::arg("g"));
  m.def("total_variation", &total_variation, py::arg("f"));

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("kind", [](const Verdict& v) { return std::string(to_string(v.kind)); })
      .def_property_readonly("witness", [](const Verdict& v) { return witness_list(v.witness); })
      .def_property_readonly("budget", [](const Verdict& v) { return v.budget; })
      .def("to_json", [](const Verdict& v) { return encode_verdict(v, {}); })
      .def("__repr__", [](const Verdict& v) { return std::string("<Verdict ") + to_string(v.kind) + ">"; });

  m.def(
      "is_transitive",
      [](const CurveMap& f, int grid_level, int n_max) { return is_transitive_pipeline(f, {grid_level, n_max}); },
      py::arg("f"), py::arg("grid_level") = 6, py::arg("n_max") = 64);
  m.def(
      "leo_certify", [](const CurveMap& f, int grid_level, int n_max) { return leo_certify(PLMap(f), grid_level, n_max); },
      py::arg("f"), py::arg("grid_level") = 6, py::arg("n_max") = 64);
  m.def("invariant_region_refute", &invariant_region_refute, py::arg("f"), py::arg("grid_level") = 6,
        py::arg("n_max") = 64);
  m.def(
      "reach_check",
      [](const CurveMap& f, const Pair& u, const Pair& v, int n) {
        return reach_check(f, to_interval(u), to_interval(v), n);
      },
      py::arg("f"), py::arg("u"), py::arg("v"), py::arg("n"));

  m.def("square_map", &square_map);
  m.def("sawtooth3", [] { return sawtooth3().map(); });
  m.def("ruette_family", [](int n) { return ruette_family(n).map(); }, py::arg("n"));
  m.def("is_surjective", &is_surjective, py::arg("f"));
  m.def(
      "nowhere_dense_perturbation",
      [](const CurveMap& g, const Scalar& epsilon) {
        const Perturbation p = nowhere_dense_perturbation(PLMap(g), epsilon);
        py::dict d;
        d["map"] = p.map;
        d["fixed_point"] = p.fixed_point;
        d["radius"] = p.radius;
        d["trap"] = from_interval(p.trap);
        d["verdict"] = p.verdict;
        return d;
      },
      py::arg("g"), py::arg("epsilon"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name) {
        std::string text;
        {
          py::gil_scoped_release release;
          text = run_suite(name).to_json();
        }
        return py::module_::import("json").attr("loads")(text);
      },
      py::arg("name"), "Runs a property suite and returns its report as a dict.");
}
