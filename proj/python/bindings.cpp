#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "nestcyc/error.hpp"
#include "nestcyc/expander.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/io.hpp"
#include "nestcyc/pipeline.hpp"
#include "nestcyc/serialize.hpp"
#include "nestcyc/verifier.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace nestcyc;

namespace {

Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> e;
  e.reserve(edges.size());
  for (auto [u, v] : edges) e.push_back({u, v});
  return build_graph(n, e);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

ExpanderParams params_for(const Graph& g, double eps1, std::optional<double> k) {
  const double d = g.vertex_count() == 0 ? 0.0 : average_degree(g).to_double();
  ExpanderParams p{eps1, k.value_or(eps1 * d)};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Nested cycles without crossings: construction, verification and search";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&from_edges), "n"_a, "edges"_a)
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.has_vertex(v)) throw InputError("vertex out of range");
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("to_edge_list", &format_edge_list)
      .def("hash", [](const Graph& g) { return hash_hex(graph_hash(g)); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("generate", &generate_graph, "spec"_a, "seed"_a = 0);
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); }, "text"_a);
  m.def("girth", &girth, "g"_a);
  m.def("shortest_cycle", [](const Graph& g) -> std::optional<std::vector<Vertex>> {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return c->vertices();
  }, "g"_a);
  m.def("epsilon", [](double x, double eps1, double k) {
    ExpanderParams p{eps1, k};
    p.validate();
    return epsilon(x, p);
  }, "x"_a, "eps1"_a, "k"_a);
  m.def("chords_cross", [](std::size_t length, std::size_t e1, std::size_t e2, std::size_t f1,
                           std::size_t f2) { return chords_cross({length, e1, e2, f1, f2}); },
        "outer_length"_a, "e1"_a, "e2"_a, "f1"_a, "f2"_a);
  m.def("verify", [](const Graph& g, const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
    return to_json(verify_nested_no_crossings(g, outer, inner)).dump();
  }, "g"_a, "outer"_a, "inner"_a);
  m.def("oracle", [](const Graph& g, std::size_t max_cycles, std::size_t max_len) {
    SearchCaps caps;
    caps.max_cycles = max_cycles;
    caps.max_cycle_length = max_len;
    OracleResult r;
    {
      py::gil_scoped_release release;
      r = oracle_find_nested_pair(g, caps);
    }
    return to_json(r).dump();
  }, "g"_a, "max_cycles"_a = 500000, "max_len"_a = 0);
  m.def("extract", [](const Graph& g, double eps1, std::optional<double> k) {
    ExpanderParams p = params_for(g, eps1, k);
    Extraction ext;
    {
      py::gil_scoped_release release;
      ext = extract_expander_subgraph(g, p);
    }
    Json j = {{"expander", to_json(p)}, {"extraction", to_json(ext.report)}};
    if (ext.subgraph) j["subgraph"] = ext.subgraph->to_original;
    return j.dump();
  }, "g"_a, "eps1"_a = 0.1, "k"_a = py::none());
  m.def("pipeline", [](const Graph& g, double eps1, std::optional<std::size_t> blob_size) {
    PipelineConfig cfg;
    cfg.eps1 = eps1;
    cfg.blob_size = blob_size;
    PipelineResult r;
    {
      py::gil_scoped_release release;
      r = run_pipeline(g, cfg);
    }
    return to_json(r).dump();
  }, "g"_a, "eps1"_a = 0.1, "blob_size"_a = py::none());
}
