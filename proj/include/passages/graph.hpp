#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "passages/errors.hpp"

namespace passages {

/// Directed edge as a pair of dense vertex indices. Indices are assigned in
/// lexicographic name order, so the default ordering of Edge values matches
/// lexicographic ordering of (tail name, head name).
struct Edge {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed graph. Vertices are interned strings; the dense index
/// of a vertex is its rank in the sorted name list. Construction is the only
/// mutating phase; afterwards any number of threads may read concurrently.
///
/// Graphs are handled through `Graph::Ref` (shared_ptr) because edge sets and
/// passages carry the identity of their owning graph: two sets over different
/// Graph objects never mix, even if the objects are structurally equal.
class Graph {
 public:
  using Ref = std::shared_ptr<const Graph>;

  /// Builds a graph from explicit vertex names plus edges given as name
  /// pairs. Edge endpoints are added to the vertex set automatically;
  /// duplicate edges collapse. Throws Error(invalid_name) for malformed
  /// vertex names.
  static Ref create(std::span<const std::string> vertex_names,
                    std::span<const std::pair<std::string, std::string>> edges);

  std::uint32_t vertex_count() const noexcept {
    return static_cast<std::uint32_t>(names_.size());
  }
  std::uint32_t edge_count() const noexcept {
    return static_cast<std::uint32_t>(edges_.size());
  }

  const std::string& name(std::uint32_t vertex) const { return names_.at(vertex); }
  std::optional<std::uint32_t> index_of(std::string_view name) const noexcept;

  /// Vertex names in index order (sorted).
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }

  /// Edges sorted by (tail, head); the position of an edge in this vector is
  /// its edge id.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Edge e) const noexcept { return edge_id(e).has_value(); }
  std::optional<std::uint32_t> edge_id(Edge e) const noexcept;
  std::optional<Edge> find_edge(std::string_view tail, std::string_view head) const noexcept;

  /// Half-open range [first, second) of ids of edges whose tail is `vertex`.
  /// Contiguous because edges are sorted by tail first.
  std::pair<std::uint32_t, std::uint32_t> tail_range(std::uint32_t vertex) const;

  /// Ids of edges whose head is `vertex`.
  std::span<const std::uint32_t> head_ids(std::uint32_t vertex) const;

 private:
  Graph() = default;

  std::vector<std::string> names_;          // sorted unique
  std::vector<Edge> edges_;                 // sorted unique
  std::vector<std::uint32_t> tail_offsets_; // size V+1
  std::vector<std::uint32_t> by_head_;      // edge ids grouped by head
  std::vector<std::uint32_t> head_offsets_; // size V+1
};

/// Weighted graph for approximate passages: vertices plus a sparse weight
/// map over ordered vertex pairs. Weights live in [-1, 1] and are stored
/// exactly as integers scaled by `kWeightScale` (six decimal places); pairs
/// absent from the map weigh 0.
class WeightedGraph {
 public:
  using Ref = std::shared_ptr<const WeightedGraph>;

  static constexpr std::int64_t kWeightScale = 1'000'000;

  /// `scaled_weights` entries are (tail, head, weight in millionths).
  /// Throws on out-of-range weights and duplicate pairs.
  static Ref create(
      std::span<const std::string> vertex_names,
      std::span<const std::tuple<std::string, std::string, std::int64_t>> scaled_weights);

  std::uint32_t vertex_count() const noexcept {
    return static_cast<std::uint32_t>(names_.size());
  }
  const std::string& name(std::uint32_t vertex) const { return names_.at(vertex); }
  std::optional<std::uint32_t> index_of(std::string_view name) const noexcept;
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }

  /// Stored pairs sorted by (tail, head), weights in millionths.
  const std::vector<std::pair<Edge, std::int64_t>>& scaled_weights() const noexcept {
    return weights_;
  }

  /// Weight of a pair in millionths; 0 when the pair is not stored.
  std::int64_t scaled_weight(Edge pair) const noexcept;

 private:
  WeightedGraph() = default;

  std::vector<std::string> names_;
  std::vector<std::pair<Edge, std::int64_t>> weights_;
};

/// Parses the edge-list format: one edge per line as "x y" or "x -> y",
/// "node z" for an isolated vertex, "#"-lines are comments. Reports the
/// 1-based line number on malformed input.
Graph::Ref parse_graph(std::string_view text);

/// Inverse of parse_graph. Edge lines come first in (tail, head) name order,
/// then "node" lines for isolated vertices; output always re-parses to an
/// equal graph.
std::string serialize_graph(const Graph& g);

/// Parses the weights format: "x y w" lines with w a decimal in [-1, 1]
/// carrying at most six decimal places. Duplicate pairs are errors.
WeightedGraph::Ref parse_weighted_graph(std::string_view text);

/// Maps a weight in [-1, 1] to the probability (w + 1) / 2 that the edge
/// exists. Throws Error(weight_out_of_range) outside the interval.
double edge_probability(double weight);

/// Parses a decimal token into millionths, enforcing the [-1, 1] range and
/// the six-decimal-place limit. Used by the weights parser.
std::int64_t parse_scaled_weight(std::string_view token);

/// True iff `name` is usable as a vertex name: non-empty, no whitespace, no
/// "->", not the reserved word "node", and not starting with '#'. The last
/// two restrictions keep serialize_graph output unambiguous.
bool valid_vertex_name(std::string_view name) noexcept;

}  // namespace passages
