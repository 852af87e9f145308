#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "firefight/adversaries.hpp"
#include "firefight/algorithms.hpp"
#include "firefight/cactus.hpp"
#include "firefight/errors.hpp"
#include "firefight/exact_opt.hpp"
#include "firefight/game.hpp"
#include "firefight/generators.hpp"
#include "firefight/instance_io.hpp"

namespace py = pybind11;
using namespace firefight;

namespace {

using PySchedule = std::vector<std::pair<int, Vertex>>;

PySchedule to_py(const ProtectionSchedule& s) {
  PySchedule out;
  for (const auto& p : s) out.emplace_back(p.round, p.vertex);
  return out;
}

ProtectionSchedule from_py(const PySchedule& s) {
  ProtectionSchedule out;
  for (const auto& [round, vertex] : s) out.push_back({round, vertex});
  return out;
}

AlgorithmKind kind_of(const std::string& name) {
  const auto k = parse_algorithm(name);
  if (!k) throw py::value_error("unknown algorithm '" + name + "'");
  return *k;
}

}  // namespace

PYBIND11_MODULE(_firefight, m) {
  m.doc() = "Online firefighting on trees, 1-almost trees and cacti";

  const auto error = py::register_exception<Error>(m, "FirefightError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges, Vertex root) { return Graph(n, edges, root); }),
           py::arg("n"), py::arg("edges"), py::arg("root") = 0)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("root", &Graph::root)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             const auto s = g.neighbors(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("graph_class", [](const Graph& g) { return std::string(to_string(validate_and_decompose(g).class_tag)); })
      .def("cycles", [](const Graph& g) { return validate_and_decompose(g).cycles; });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](Graph g, std::vector<int> sequence, std::string name) {
             return Instance{std::move(g), std::move(sequence), std::move(name)};
           }),
           py::arg("graph"), py::arg("sequence"), py::arg("name") = "")
      .def_readwrite("graph", &Instance::graph)
      .def_readwrite("sequence", &Instance::sequence)
      .def_readwrite("name", &Instance::name)
      .def_property_readonly("n", &Instance::num_vertices);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("profit", &RunResult::profit)
      .def_property_readonly("schedule", [](const RunResult& r) { return to_py(schedule_from_trace(r.trace)); })
      .def_property_readonly("reasons",
                             [](const RunResult& r) {
                               std::vector<std::string> out;
                               for (auto reason : r.reasons) out.emplace_back(to_string(reason));
                               return out;
                             })
      .def_readonly("gains", &RunResult::gains)
      .def_readonly("diagnostics", &RunResult::diagnostics);

  m.def(
      "run_algorithm", [](const Instance& inst, const std::string& alg) { return run_algorithm(inst, kind_of(alg)); },
      py::arg("instance"), py::arg("alg"));

  m.def(
      "solve_opt",
      [](const Instance& inst, int max_vertices, std::int64_t node_budget) {
        SolverOptions o;
        o.max_vertices = max_vertices;
        o.node_budget = node_budget;
        const auto r = solve_opt(inst, o);
        return py::make_tuple(r.value, to_py(r.schedule));
      },
      py::arg("instance"), py::arg("max_vertices") = SolverOptions{}.max_vertices,
      py::arg("node_budget") = SolverOptions{}.node_budget);

  m.def(
      "replay", [](const Instance& inst, const PySchedule& s) { return replay(inst, from_py(s)).profit; },
      py::arg("instance"), py::arg("schedule"));

  m.def(
      "covered_set",
      [](const Graph& g, const std::vector<Vertex>& s) { return covered_set(g, VertexSet(g.num_vertices(), s)).members(); },
      py::arg("graph"), py::arg("protected"));

  m.def("make_tadpole", &make_tadpole, py::arg("alpha"), py::arg("beta"));
  m.def("make_alge_tight", &make_alge_tight, py::arg("beta"));
  m.def(
      "alge_tight_witness", [](int beta) { return to_py(alge_tight_witness(beta)); }, py::arg("beta"));

  m.def(
      "tadpole_adversary_run",
      [](const std::string& alg, int beta) {
        const auto r = tadpole_adversary_run(kind_of(alg), beta);
        py::dict d;
        d["beta"] = r.beta;
        d["alpha"] = r.alpha;
        d["n"] = r.n;
        d["case"] = static_cast<int>(r.branch);
        d["sequence"] = r.sequence;
        d["alg_profit"] = r.alg_profit;
        d["opt_profit"] = r.opt_profit;
        d["ratio"] = r.ratio;
        d["lower_bound_met"] = r.meets_lower_bound();
        return d;
      },
      py::arg("alg"), py::arg("beta"));

  m.def("random_cactus", &random_cactus, py::arg("n"), py::arg("cycle_fraction"), py::arg("max_cycle_len"),
        py::arg("seed"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_sequence", &random_sequence, py::arg("length"), py::arg("total_budget"), py::arg("even_only"),
        py::arg("seed"));

  m.def(
      "parse_instance", [](const std::string& text) { return parse_instance(text); }, py::arg("text"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
}
