#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "passages/passage.hpp"

namespace passages {

/// Boundary of a passage: input vertices are tails that are never heads
/// inside the passage, output vertices the reverse, io vertices both.
struct BoundaryVertices {
  std::vector<std::uint32_t> input;   // initial only
  std::vector<std::uint32_t> output;  // terminal only
  std::vector<std::uint32_t> io;      // both
};

BoundaryVertices boundary(const Passage& p);

/// The five-way split of the graph's vertices induced by a partitioning:
/// isolated (touch no edge), input (tails only), output (heads only),
/// connecting (terminal in one part, initial in another), local (initial and
/// terminal within the same part). Always partitions the vertex set.
struct VertexClassification {
  std::vector<std::uint32_t> isolated;
  std::vector<std::uint32_t> input;
  std::vector<std::uint32_t> output;
  std::vector<std::uint32_t> connecting;
  std::vector<std::uint32_t> local;
};

VertexClassification classify_vertices(const PassagePartitioning& pp);

/// Directed graph over the parts of a partitioning; an arc (P, P') exists
/// iff P feeds P', self-arcs included.
struct PassageGraph {
  PassagePartitioning partitioning;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  // sorted part index pairs
};

PassageGraph build_passage_graph(const PassagePartitioning& pp);

struct DotOptions {
  enum class LabelMode { index, edge_count };

  bool show_self_arcs = false;
  LabelMode label_mode = LabelMode::edge_count;
};

/// Renders the passage graph in DOT. Nodes are named P1..Pn in partitioning
/// order; arcs come out sorted, self-arcs only with show_self_arcs.
std::string to_dot(const PassageGraph& pg, const DotOptions& options = {});

}  // namespace passages
