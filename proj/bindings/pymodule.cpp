// Python bindings. Edges cross the boundary as (tail, head) name tuples;
// exact rationals come back as fractions.Fraction.

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "passages/approx.hpp"
#include "passages/counting.hpp"
#include "passages/passage.hpp"
#include "passages/passage_graph.hpp"

namespace py = pybind11;
using namespace passages;

namespace {

using NamePair = std::pair<std::string, std::string>;

py::object py_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

py::object py_fraction(const Rational& value) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(boost::multiprecision::numerator(value)),
                  py_int(boost::multiprecision::denominator(value)));
}

std::shared_ptr<Graph> shared(Graph::Ref g) {
  return std::const_pointer_cast<Graph>(std::move(g));
}

Edge resolve_edge(const Graph& g, const NamePair& pair) {
  auto t = g.index_of(pair.first);
  auto h = g.index_of(pair.second);
  if (!t || !h) {
    throw Error(Errc::unknown_vertex, "unknown vertex '" + (t ? pair.second : pair.first) + "'");
  }
  return Edge{*t, *h};
}

Edge resolve_pair(const WeightedGraph& wg, const NamePair& pair) {
  auto t = wg.index_of(pair.first);
  auto h = wg.index_of(pair.second);
  if (!t || !h) {
    throw Error(Errc::unknown_vertex, "unknown vertex '" + (t ? pair.second : pair.first) + "'");
  }
  return Edge{*t, *h};
}

std::vector<NamePair> edge_names(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<NamePair> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(g.name(e.tail), g.name(e.head));
  return out;
}

std::vector<std::string> vertex_names(const Graph& g, const std::vector<std::uint32_t>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (std::uint32_t v : vs) out.push_back(g.name(v));
  return out;
}

EdgeSet edge_set(std::shared_ptr<Graph> g, const std::vector<NamePair>& edges) {
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& pair : edges) resolved.push_back(resolve_edge(*g, pair));
  return EdgeSet(std::move(g), std::move(resolved));
}

std::optional<Rational> to_rational(const py::object& value) {
  if (value.is_none()) return std::nullopt;
  if (py::isinstance<py::str>(value)) {
    return rational_from_decimal(value.cast<std::string>());
  }
  if (py::isinstance<py::int_>(value)) {
    return Rational(value.cast<std::int64_t>());
  }
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    return Rational(value.attr("numerator").cast<std::int64_t>(),
                    value.attr("denominator").cast<std::int64_t>());
  }
  // Floats round to millionths, matching the weight resolution.
  const double v = value.cast<double>();
  return Rational(std::llround(v * 1'000'000.0), 1'000'000);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Passage decomposition of directed graphs";
#ifdef PASSAGES_VERSION
  m.attr("__version__") = PASSAGES_VERSION;
#endif

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<NamePair>& edges) {
             return shared(Graph::create(vertices, edges));
           }),
           py::arg("vertices") = std::vector<std::string>{},
           py::arg("edges") = std::vector<NamePair>{})
      .def_property_readonly("vertices",
                             [](const Graph& g) { return g.vertex_names(); })
      .def_property_readonly("edges",
                             [](const Graph& g) { return edge_names(g, g.edges()); })
      .def("__contains__",
           [](const Graph& g, const NamePair& e) {
             return g.find_edge(e.first, e.second).has_value();
           })
      .def("__repr__", [](const Graph& g) {
        return "Graph(|V|=" + std::to_string(g.vertex_count()) +
               ", |E|=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<WeightedGraph, std::shared_ptr<WeightedGraph>>(m, "WeightedGraph")
      .def(py::init([](const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string, double>>& weights) {
             std::vector<std::tuple<std::string, std::string, std::int64_t>> scaled;
             scaled.reserve(weights.size());
             for (const auto& [t, h, w] : weights) {
               scaled.emplace_back(t, h, std::llround(w * WeightedGraph::kWeightScale));
             }
             return std::const_pointer_cast<WeightedGraph>(
                 WeightedGraph::create(vertices, scaled));
           }),
           py::arg("vertices") = std::vector<std::string>{},
           py::arg("weights") = std::vector<std::tuple<std::string, std::string, double>>{})
      .def_property_readonly("vertices",
                             [](const WeightedGraph& wg) { return wg.vertex_names(); })
      .def_property_readonly("weights",
                             [](const WeightedGraph& wg) {
                               py::dict out;
                               for (const auto& [e, w] : wg.scaled_weights()) {
                                 out[py::make_tuple(wg.name(e.tail), wg.name(e.head))] =
                                     py_fraction(Rational(w, WeightedGraph::kWeightScale));
                               }
                               return out;
                             })
      .def("__repr__", [](const WeightedGraph& wg) {
        return "WeightedGraph(|V|=" + std::to_string(wg.vertex_count()) +
               ", pairs=" + std::to_string(wg.scaled_weights().size()) + ")";
      });

  py::class_<Passage>(m, "Passage")
      .def_property_readonly(
          "edges", [](const Passage& p) { return edge_names(*p.graph(), p.edges()); })
      .def("__len__", [](const Passage& p) { return p.size(); })
      .def("__eq__", [](const Passage& a, const Passage& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const Passage& p) {
        return "Passage(" + std::to_string(p.size()) + " edges)";
      });

  py::class_<PassagePartitioning>(m, "PassagePartitioning")
      .def_property_readonly("parts",
                             [](const PassagePartitioning& pp) { return pp.parts(); })
      .def("__len__", [](const PassagePartitioning& pp) { return pp.size(); })
      .def("__eq__",
           [](const PassagePartitioning& a, const PassagePartitioning& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const PassagePartitioning& pp) {
        return "PassagePartitioning(" + std::to_string(pp.size()) + " parts)";
      });

  py::class_<PassageGraph>(m, "PassageGraph")
      .def_readonly("partitioning", &PassageGraph::partitioning)
      .def_readonly("arcs", &PassageGraph::arcs);

  py::class_<PassageCount>(m, "PassageCount")
      .def_property_readonly("k", [](const PassageCount& c) { return c.minimal_count; })
      .def_property_readonly("passages",
                             [](const PassageCount& c) { return py_int(c.passages); })
      .def_property_readonly("partitionings",
                             [](const PassageCount& c) { return py_int(c.partitionings); })
      .def("__repr__", [](const PassageCount& c) {
        return "PassageCount(k=" + std::to_string(c.minimal_count) +
               ", passages=" + c.passages.str() + ", partitionings=" +
               c.partitionings.str() + ")";
      });

  py::class_<ApproxSolution>(m, "ApproxSolution")
      .def_property_readonly("chosen",
                             [](const ApproxSolution& s) {
                               std::vector<NamePair> out;
                               for (const Edge& e : s.chosen) {
                                 out.emplace_back(s.graph->name(e.tail), s.graph->name(e.head));
                               }
                               return out;
                             })
      .def_property_readonly("graph", [](const ApproxSolution& s) { return shared(s.graph); })
      .def_readonly("partitioning", &ApproxSolution::partitioning)
      .def_property_readonly("av",
                             [](const ApproxSolution& s) { return py_fraction(s.quality.average); })
      .def_property_readonly("big", [](const ApproxSolution& s) { return s.quality.biggest; })
      .def_property_readonly("acc",
                             [](const ApproxSolution& s) { return py_fraction(s.quality.acc); })
      .def_property_readonly("mode", [](const ApproxSolution& s) {
        return s.mode == OptimizeMode::exact ? "exact" : "greedy";
      });

  m.def("parse_graph",
        [](const std::string& text) { return shared(parse_graph(text)); },
        py::arg("text"));
  m.def("serialize_graph",
        [](const std::shared_ptr<Graph>& g) { return serialize_graph(*g); },
        py::arg("graph"));
  m.def("parse_weighted_graph",
        [](const std::string& text) {
          return std::const_pointer_cast<WeightedGraph>(parse_weighted_graph(text));
        },
        py::arg("text"));
  m.def("edge_probability", &edge_probability, py::arg("weight"),
        "Probability (w + 1) / 2 that an edge with weight w exists.");

  m.def("is_passage",
        [](std::shared_ptr<Graph> g, const std::vector<NamePair>& edges) {
          return is_passage(edge_set(std::move(g), edges));
        },
        py::arg("graph"), py::arg("edges"));
  m.def("make_passage",
        [](std::shared_ptr<Graph> g, const std::vector<NamePair>& edges) {
          return Passage::checked(edge_set(std::move(g), edges));
        },
        py::arg("graph"), py::arg("edges"),
        "Validates the edge set and returns it as a Passage.");
  m.def("initial_vertices",
        [](std::shared_ptr<Graph> g, const std::vector<NamePair>& edges) {
          auto set = edge_set(g, edges);
          return vertex_names(*g, initial_vertices(set));
        },
        py::arg("graph"), py::arg("edges"));
  m.def("terminal_vertices",
        [](std::shared_ptr<Graph> g, const std::vector<NamePair>& edges) {
          auto set = edge_set(g, edges);
          return vertex_names(*g, terminal_vertices(set));
        },
        py::arg("graph"), py::arg("edges"));

  m.def("union_of", &union_of, py::arg("p1"), py::arg("p2"));
  m.def("intersection_of", &intersection_of, py::arg("p1"), py::arg("p2"));
  m.def("difference_of", &difference_of, py::arg("p1"), py::arg("p2"));
  m.def("disjoint", &disjoint, py::arg("p1"), py::arg("p2"));
  m.def("feeds", &feeds, py::arg("p1"), py::arg("p2"));

  m.def("closure",
        [](std::shared_ptr<Graph> g, const std::vector<NamePair>& seed) {
          return closure(edge_set(std::move(g), seed));
        },
        py::arg("graph"), py::arg("seed"),
        "Smallest passage containing the seed edges.");
  m.def("minimal_passage_of",
        [](std::shared_ptr<Graph> g, const NamePair& e) {
          return minimal_passage_of(g, resolve_edge(*g, e));
        },
        py::arg("graph"), py::arg("edge"));
  m.def("minimal_passages",
        [](std::shared_ptr<Graph> g) { return minimal_passages(g); },
        py::arg("graph"));
  m.def("decompose", &decompose, py::arg("passage"),
        "Minimal passages composing the given passage.");
  m.def("validate_partitioning",
        [](std::shared_ptr<Graph> g, const std::vector<std::vector<NamePair>>& parts) {
          std::vector<EdgeSet> sets;
          sets.reserve(parts.size());
          for (const auto& part : parts) sets.push_back(edge_set(g, part));
          return validate_partitioning(g, std::move(sets));
        },
        py::arg("graph"), py::arg("parts"));
  m.def("same_passage",
        [](const PassagePartitioning& pp, const NamePair& e1, const NamePair& e2) {
          return same_passage(pp, resolve_edge(*pp.graph(), e1), resolve_edge(*pp.graph(), e2));
        },
        py::arg("partitioning"), py::arg("e1"), py::arg("e2"));

  m.def("bell_number",
        [](std::uint64_t k) { return py_int(bell_number(k)); }, py::arg("k"));
  m.def("count_passages",
        [](std::shared_ptr<Graph> g) { return count_passages(g); }, py::arg("graph"));
  m.def("enumerate_passages",
        [](std::shared_ptr<Graph> g, std::uint64_t limit) {
          PassageEnumerator stream(std::move(g), limit);
          std::vector<Passage> items;
          while (auto p = stream.next()) items.push_back(std::move(*p));
          return py::make_tuple(std::move(items), stream.truncated());
        },
        py::arg("graph"), py::arg("limit") = 1000,
        "Returns (passages, truncated).");
  m.def("enumerate_partitionings",
        [](std::shared_ptr<Graph> g, std::uint64_t limit) {
          PartitioningEnumerator stream(std::move(g), limit);
          std::vector<PassagePartitioning> items;
          while (auto pp = stream.next()) items.push_back(std::move(*pp));
          return py::make_tuple(std::move(items), stream.truncated());
        },
        py::arg("graph"), py::arg("limit") = 1000,
        "Returns (partitionings, truncated).");

  m.def("boundary",
        [](const Passage& p) {
          const auto b = boundary(p);
          py::dict out;
          out["input"] = vertex_names(*p.graph(), b.input);
          out["output"] = vertex_names(*p.graph(), b.output);
          out["io"] = vertex_names(*p.graph(), b.io);
          return out;
        },
        py::arg("passage"));
  m.def("classify_vertices",
        [](const PassagePartitioning& pp) {
          const auto c = classify_vertices(pp);
          const Graph& g = *pp.graph();
          py::dict out;
          out["isolated"] = vertex_names(g, c.isolated);
          out["input"] = vertex_names(g, c.input);
          out["output"] = vertex_names(g, c.output);
          out["connecting"] = vertex_names(g, c.connecting);
          out["local"] = vertex_names(g, c.local);
          return out;
        },
        py::arg("partitioning"));
  m.def("build_passage_graph", &build_passage_graph, py::arg("partitioning"));
  m.def("to_dot",
        [](const PassageGraph& pg, bool show_self_arcs, const std::string& label_mode) {
          DotOptions options;
          options.show_self_arcs = show_self_arcs;
          options.label_mode = label_mode == "index" ? DotOptions::LabelMode::index
                                                     : DotOptions::LabelMode::edge_count;
          return to_dot(pg, options);
        },
        py::arg("passage_graph"), py::arg("show_self_arcs") = false,
        py::arg("label_mode") = "edge-count");

  m.def("average_size",
        [](const PassagePartitioning& pp) { return py_fraction(average_size(pp)); },
        py::arg("partitioning"));
  m.def("biggest_size", &biggest_size, py::arg("partitioning"));
  m.def("accuracy",
        [](const std::shared_ptr<WeightedGraph>& wg, const std::vector<NamePair>& chosen) {
          std::vector<Edge> edges;
          edges.reserve(chosen.size());
          for (const auto& pair : chosen) edges.push_back(resolve_pair(*wg, pair));
          return py_fraction(accuracy(*wg, edges));
        },
        py::arg("weighted_graph"), py::arg("chosen"));
  m.def("optimize",
        [](const std::shared_ptr<WeightedGraph>& wg, const py::object& tau_av,
           const py::object& tau_big, const std::string& mode) {
          std::optional<std::int64_t> big;
          if (!tau_big.is_none()) big = tau_big.cast<std::int64_t>();
          return optimize(wg, to_rational(tau_av), big,
                          mode == "exact" ? OptimizeMode::exact : OptimizeMode::greedy);
        },
        py::arg("weighted_graph"), py::arg("tau_av") = py::none(),
        py::arg("tau_big") = py::none(), py::arg("mode") = "greedy");
}
