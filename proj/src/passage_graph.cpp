#include "passages/passage_graph.hpp"

#include <algorithm>
#include <sstream>

namespace passages {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

// Per vertex: index of the part it is initial in / terminal in, if any.
// Unique because parts of a partitioning have disjoint initial vertex sets
// (and disjoint terminal vertex sets).
struct PartIndex {
  std::vector<std::uint32_t> initial_in;
  std::vector<std::uint32_t> terminal_in;
};

PartIndex index_parts(const PassagePartitioning& pp) {
  PartIndex idx;
  const std::uint32_t v = pp.graph()->vertex_count();
  idx.initial_in.assign(v, kNone);
  idx.terminal_in.assign(v, kNone);
  for (std::uint32_t i = 0; i < pp.size(); ++i) {
    for (const Edge& e : pp.parts()[i].edges()) {
      idx.initial_in[e.tail] = i;
      idx.terminal_in[e.head] = i;
    }
  }
  return idx;
}

}  // namespace

BoundaryVertices boundary(const Passage& p) {
  const auto initial = initial_vertices(p.edge_set());
  const auto terminal = terminal_vertices(p.edge_set());
  BoundaryVertices out;
  std::set_difference(initial.begin(), initial.end(), terminal.begin(), terminal.end(),
                      std::back_inserter(out.input));
  std::set_difference(terminal.begin(), terminal.end(), initial.begin(), initial.end(),
                      std::back_inserter(out.output));
  std::set_intersection(initial.begin(), initial.end(), terminal.begin(), terminal.end(),
                        std::back_inserter(out.io));
  return out;
}

VertexClassification classify_vertices(const PassagePartitioning& pp) {
  const Graph& g = *pp.graph();
  const PartIndex idx = index_parts(pp);

  VertexClassification out;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t tail_part = idx.initial_in[v];
    const std::uint32_t head_part = idx.terminal_in[v];
    if (tail_part == kNone && head_part == kNone) {
      out.isolated.push_back(v);
    } else if (head_part == kNone) {
      out.input.push_back(v);
    } else if (tail_part == kNone) {
      out.output.push_back(v);
    } else if (tail_part == head_part) {
      out.local.push_back(v);
    } else {
      out.connecting.push_back(v);
    }
  }
  return out;
}

PassageGraph build_passage_graph(const PassagePartitioning& pp) {
  const PartIndex idx = index_parts(pp);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::uint32_t v = 0; v < pp.graph()->vertex_count(); ++v) {
    // v terminal in one part and initial in another (or the same) realizes
    // exactly one feeds witness.
    if (idx.terminal_in[v] != kNone && idx.initial_in[v] != kNone) {
      arcs.emplace_back(idx.terminal_in[v], idx.initial_in[v]);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return PassageGraph{pp, std::move(arcs)};
}

std::string to_dot(const PassageGraph& pg, const DotOptions& options) {
  if (pg.partitioning.size() == 0) return "digraph passages { }\n";

  std::ostringstream out;
  out << "digraph passages {\n";
  for (std::uint32_t i = 0; i < pg.partitioning.size(); ++i) {
    const std::size_t m = pg.partitioning.parts()[i].size();
    out << "  P" << (i + 1);
    if (options.label_mode == DotOptions::LabelMode::edge_count) {
      out << " [label=\"P" << (i + 1) << " (" << m << (m == 1 ? " edge" : " edges") << ")\"]";
    }
    out << ";\n";
  }
  for (const auto& [from, to] : pg.arcs) {
    if (from == to && !options.show_self_arcs) continue;
    out << "  P" << (from + 1) << " -> P" << (to + 1) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace passages
