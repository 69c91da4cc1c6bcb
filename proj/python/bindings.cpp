#include "meandist/commands.hpp"
#include "meandist/errors.hpp"
#include "meandist/generators.hpp"
#include "meandist/mesh.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace meandist;

namespace {

py::object as_python(const Report& report) {
  return py::module_::import("json").attr("loads")(to_json(report));
}

py::dict bound_dict(const BoundReport& r) {
  py::dict d;
  d["theorem"] = theorem_id(r.spec.theorem);
  d["n"] = r.spec.n;
  d["constant"] = r.threshold;
  d["ratio"] = r.ratio;
  d["satisfied"] = r.satisfied;
  d["strict"] = r.strict;
  d["equality"] = r.equality;
  d["within_hypothesis"] = r.within_hypothesis;
  d["verdict"] = to_string(r.verdict);
  return d;
}

Theorem parse_theorem(const std::string& id) {
  for (Theorem t : {Theorem::CompactRicci, Theorem::SphereUpper, Theorem::CartanHadamard,
                    Theorem::NoncompactRicci}) {
    if (theorem_id(t) == id) return t;
  }
  throw InputError("unknown theorem id '" + id + "'");
}

}  // namespace

PYBIND11_MODULE(_meandist, m) {
  m.doc() = "Mean distance functional on model spaces and meshes";
  m.attr("__version__") = kVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("c_compact", &c_compact, py::arg("n"));
  m.def("c_hadamard", &c_hadamard, py::arg("n"));
  m.def("c_noncompact", &c_noncompact, py::arg("n"));
  m.def("g_compact", &g_compact, py::arg("r"), py::arg("d"), py::arg("n"));
  m.def("g_hadamard", &g_hadamard, py::arg("r"), py::arg("d"), py::arg("n"));
  m.def("g_noncompact", &g_noncompact, py::arg("t"), py::arg("d"), py::arg("n"));
  m.def("argmax_g_compact", &argmax_g_compact, py::arg("d"), py::arg("n"));
  m.def("argmax_g_hadamard", &argmax_g_hadamard, py::arg("d"), py::arg("n"));
  m.def("argmax_g_noncompact", &argmax_g_noncompact, py::arg("d"), py::arg("n"));

  m.def(
      "check_lower_bound",
      [](const std::string& theorem, int n, double f, double d, double v) {
        return bound_dict(check_lower_bound(BoundSpec::make(parse_theorem(theorem), n), f, d, v));
      },
      py::arg("theorem"), py::arg("n"), py::arg("f"), py::arg("diameter"), py::arg("volume"));
  m.def(
      "check_upper_bound_sphere",
      [](int n, double k, double f, double tolerance) {
        return bound_dict(check_upper_bound_sphere(n, k, f, tolerance));
      },
      py::arg("n"), py::arg("k"), py::arg("f"), py::arg("tolerance") = kExactEqualityTolerance);

  m.def(
      "model_eval",
      [](const std::string& space, const std::string& point) {
        return as_python(model_eval({space, point}));
      },
      py::arg("space"), py::arg("point") = "");
  m.def(
      "mesh_eval",
      [](const std::string& generator, const std::string& mesh, const std::string& source,
         const std::string& distances, std::uint64_t seed) {
        MeshEvalConfig config;
        config.generator = generator;
        config.mesh_path = mesh;
        config.source = source;
        config.distances = distances;
        config.seed = seed;
        return as_python(mesh_eval(config));
      },
      py::arg("generator") = "", py::arg("mesh") = "", py::arg("source") = "0",
      py::arg("distances") = "graph", py::arg("seed") = 0);
  m.def(
      "verify",
      [](const std::string& suite) {
        py::gil_scoped_release release;
        const auto checks = run_suite(parse_suite(suite));
        py::gil_scoped_acquire acquire;
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["theorem"] = c.theorem;
          d["passed"] = c.passed;
          d["value"] = c.value;
          d["threshold"] = c.threshold;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all");
  m.def(
      "dumbbell_sweep",
      [](const std::vector<double>& lengths, const std::string& rule, const std::string& mode) {
        std::vector<SweepRecord> rows;
        {
          py::gil_scoped_release release;
          rows = dumbbell_sweep({lengths, rule, mode});
        }
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["L"] = r.length;
          d["C"] = r.neck_circumference;
          d["ratio_p"] = r.ratio_p;
          d["ratio_q"] = r.ratio_q;
          d["source"] = to_string(r.source);
          d["fell_back"] = r.fell_back;
          out.append(d);
        }
        return out;
      },
      py::arg("lengths") = std::vector<double>{5, 10, 20, 40, 80}, py::arg("rule") = "cube",
      py::arg("mode") = "asymptotic");

  py::class_<DiscreteManifold>(m, "DiscreteManifold")
      .def_property_readonly("vertex_count", &DiscreteManifold::vertex_count)
      .def_property_readonly("edge_count",
                             [](const DiscreteManifold& dm) { return dm.edges().size(); })
      .def_property_readonly("total_volume", &DiscreteManifold::total_volume)
      .def_property_readonly("dim_hint", &DiscreteManifold::dim_hint)
      .def_property_readonly("label", &DiscreteManifold::label)
      .def(
          "distances",
          [](const DiscreteManifold& dm, VertexId source, const std::string& method) {
            return geodesic_field(dm, source, parse_geodesic_method(method)).dist;
          },
          py::arg("source"), py::arg("method") = "graph")
      .def(
          "f",
          [](const DiscreteManifold& dm, VertexId source, const std::string& method) {
            return f_of(dm, geodesic_field(dm, source, parse_geodesic_method(method)));
          },
          py::arg("source"), py::arg("method") = "graph")
      .def(
          "diameter",
          [](const DiscreteManifold& dm, const std::string& method) {
            py::gil_scoped_release release;
            return meandist::diameter(dm, ExactDiameter{}, parse_geodesic_method(method)).value;
          },
          py::arg("method") = "graph")
      .def("eccentricity", [](const DiscreteManifold& dm, VertexId source) {
        return eccentricity(dm, source);
      });

  m.def("cycle", &cycle, py::arg("n"), py::arg("length"));
  m.def("torus_grid", &torus_grid, py::arg("n"), py::arg("side_a"), py::arg("side_b"));
  m.def("icosphere", &icosphere, py::arg("levels"));
  m.def("grid_patch", &grid_patch, py::arg("n"), py::arg("side"));
  m.def(
      "load_mesh",
      [](const std::string& path) { return from_mesh(read_mesh(path).mesh, path); },
      py::arg("path"));
  m.def(
      "dumbbell_mesh",
      [](double length, double neck) {
        auto dm = build_dumbbell_mesh(DumbbellParams(length, neck));
        return py::make_tuple(std::move(dm.manifold), dm.p, dm.q);
      },
      py::arg("length"), py::arg("neck_circumference"));
}
