#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "dpmatch/distance.hpp"
#include "dpmatch/harness.hpp"
#include "dpmatch/ingest.hpp"
#include "dpmatch/matcher.hpp"
#include "dpmatch/model.hpp"
#include "dpmatch/oracles.hpp"

namespace py = pybind11;
using namespace dpmatch;

namespace {

py::array_t<double> as_array(const DistanceMatrix& d) {
  py::array_t<double> out({d.n, d.n});
  std::copy(d.values.begin(), d.values.end(), out.mutable_data());
  return out;
}

DistanceMatrix from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ParameterError("distance matrix must be square");
  DistanceMatrix d;
  d.n = static_cast<std::size_t>(a.shape(0));
  d.values.assign(a.data(), a.data() + d.n * d.n);
  return d;
}

py::dict pair_dict(const GraphPair& p) {
  py::dict out;
  out["g"] = p.g;
  out["h"] = p.h;
  out["truth"] = p.ground_truth;
  return out;
}

}  // namespace

PYBIND11_MODULE(_dpmatch, m) {
  m.doc() = "Degree-profile graph matching";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def("__len__", &Graph::size)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("relabeled", [](const Graph& g, const Permutation& p) {
        if (!is_permutation(p) || p.size() != g.size()) throw ParameterError("not a permutation of the vertices");
        return g.relabeled(p);
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def(
      "sample_er_pair",
      [](std::size_t n, double q, double s, std::uint64_t seed) {
        return pair_dict(sample_pair(er_spec(n, q, s, kDefaultAlpha, seed)));
      },
      py::arg("n"), py::arg("q"), py::arg("s"), py::arg("seed") = 1);

  m.def(
      "sample_from_json",
      [](const std::string& text) -> py::dict {
        const auto spec = spec_from_json(nlohmann::json::parse(text));
        if (const auto* c = std::get_if<CorrelatedModelSpec>(&spec)) return pair_dict(sample_pair(*c));
        throw ParameterError("gaussian specs are not exposed to Python");
      },
      py::arg("spec_json"));

  m.def(
      "distance",
      [](const Graph& g, const Graph& h, const std::string& kind, double param, unsigned threads) {
        return as_array(compute_distance(g, h, DistanceSpec{distance_kind_from_string(kind), param}, {threads}));
      },
      py::arg("g"), py::arg("h"), py::arg("kind") = "cyclic", py::arg("param") = 0.0, py::arg("threads") = 0,
      "Distance matrix; param is L for cyclic and r for bin/disc.");

  m.def("default_L", [](std::size_t n) { return default_cyclic_L(n); }, py::arg("n"));

  m.def(
      "match",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& d,
         const std::string& mode) -> py::object {
        const auto dm = from_array(d);
        if (mode == "lenient") return py::cast(match_lenient(dm).assignment);
        if (mode != "strict") throw ParameterError("mode must be strict or lenient");
        const auto r = match_strict(dm);
        if (!r.ok()) return py::none();
        return py::cast(r.assignment);
      },
      py::arg("distance"), py::arg("mode") = "strict",
      "Row-wise argmin assignment; None when strict matching fails.");

  m.def(
      "accuracy",
      [](const std::vector<Vertex>& assignment, const Permutation& truth) {
        if (assignment.size() != truth.size()) throw ParameterError("length mismatch");
        std::size_t hit = 0;
        for (std::size_t i = 0; i < truth.size(); ++i) hit += assignment[i] == truth[i];
        return truth.empty() ? 1.0 : static_cast<double>(hit) / truth.size();
      },
      py::arg("assignment"), py::arg("truth"));

  m.def("g_eval", &g_eval, py::arg("x"), py::arg("L"));
  m.def("bernoulli_min_l1", [](const std::vector<double>& p) { return bernoulli_min_l1(p); }, py::arg("probs"));

  m.def(
      "run_experiment",
      [](const std::string& preset, std::size_t n, std::size_t runs, std::uint64_t seed,
         std::vector<double> grid) {
        auto cfg = default_config(preset_from_string(preset), n);
        cfg.runs = runs;
        cfg.seed_base = seed;
        if (!grid.empty()) cfg.noise_grid = std::move(grid);
        if (cfg.preset == Preset::realdata) throw ParameterError("realdata needs an edge list; use the CLI");
        std::ostringstream os;
        emit_csv(os, run_experiment(cfg));
        return os.str();
      },
      py::arg("preset"), py::arg("n"), py::arg("runs") = 1, py::arg("seed") = 1,
      py::arg("grid") = std::vector<double>{}, "Runs a preset and returns the result CSV.");
}
