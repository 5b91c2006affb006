#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "passages/graph.hpp"

namespace passages {

/// A subset of the edges of one particular graph. The binding to the owning
/// graph is part of the value: operations refuse to mix sets from different
/// graphs. Edges are kept sorted and deduplicated.
class EdgeSet {
 public:
  EdgeSet(Graph::Ref graph, std::vector<Edge> edges);

  static EdgeSet from_names(Graph::Ref graph,
                            std::span<const std::pair<std::string, std::string>> edges);

  const Graph::Ref& graph() const noexcept { return graph_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.graph_ == b.graph_ && a.edges_ == b.edges_;
  }

 private:
  Graph::Ref graph_;
  std::vector<Edge> edges_;
};

/// An edge set that satisfies the passage condition: for every contained
/// edge (x, y), every graph edge leaving x or entering y is contained too.
/// Values can only be obtained through `checked` (runs the predicate) or
/// through operations whose results are passages by construction (closure,
/// set algebra of passages, minimal passages).
class Passage {
 public:
  /// Validates `set` and throws Error(not_a_passage) when the condition
  /// fails.
  static Passage checked(EdgeSet set);

  /// Wraps `set` without validating. Callers must guarantee the passage
  /// condition; debug builds re-verify. Intended for results that are
  /// passages by construction.
  static Passage unchecked(EdgeSet set);

  const EdgeSet& edge_set() const noexcept { return set_; }
  const Graph::Ref& graph() const noexcept { return set_.graph(); }
  const std::vector<Edge>& edges() const noexcept { return set_.edges(); }
  std::size_t size() const noexcept { return set_.size(); }
  bool empty() const noexcept { return set_.empty(); }

  friend bool operator==(const Passage& a, const Passage& b) { return a.set_ == b.set_; }

 private:
  explicit Passage(EdgeSet set) : set_(std::move(set)) {}

  EdgeSet set_;
};

/// Pairwise-disjoint non-empty passages covering every edge of the graph.
/// Produced by minimal_passages, validate_partitioning and the partitioning
/// enumerator; a graph without edges has the empty partitioning.
class PassagePartitioning {
 public:
  const Graph::Ref& graph() const noexcept { return graph_; }
  const std::vector<Passage>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }

  friend bool operator==(const PassagePartitioning& a, const PassagePartitioning& b) {
    return a.graph_ == b.graph_ && a.parts_ == b.parts_;
  }

  /// Wraps parts without re-validating; used by producers whose output is a
  /// partitioning by construction.
  static PassagePartitioning unchecked(Graph::Ref graph, std::vector<Passage> parts);

 private:
  PassagePartitioning(Graph::Ref graph, std::vector<Passage> parts)
      : graph_(std::move(graph)), parts_(std::move(parts)) {}

  Graph::Ref graph_;
  std::vector<Passage> parts_;
};

/// The passage predicate: every edge of `s` pulls in all graph edges that
/// share its tail or its head. The empty set and the full edge set always
/// qualify.
bool is_passage(const EdgeSet& s);
bool is_passage(const Graph& g, const EdgeSet& s);  // checks the binding too

/// Tails of the edges of `s`, sorted.
std::vector<std::uint32_t> initial_vertices(const EdgeSet& s);
/// Heads of the edges of `s`, sorted.
std::vector<std::uint32_t> terminal_vertices(const EdgeSet& s);

/// Set algebra on passages bound to the same graph. Results are passages
/// without re-validation (closure under union/intersection/difference).
Passage union_of(const Passage& p1, const Passage& p2);
Passage intersection_of(const Passage& p1, const Passage& p2);
Passage difference_of(const Passage& p1, const Passage& p2);

/// True iff the edge sets are disjoint. For passages this coincides with
/// disjointness of the initial vertex sets and of the terminal vertex sets.
bool disjoint(const Passage& p1, const Passage& p2);

/// The feeds relation: some terminal vertex of p1 is an initial vertex of
/// p2. Arcs of the passage graph.
bool feeds(const Passage& p1, const Passage& p2);

/// Smallest passage containing `seed`: saturates the seed under
/// shared-tail/shared-head extension until it stops changing.
Passage closure(const EdgeSet& seed);

/// The unique minimal non-empty passage containing `e`; equals
/// closure({e}). Throws when `e` is not a graph edge.
Passage minimal_passage_of(const Graph::Ref& g, Edge e);

/// All minimal non-empty passages, computed by union-find over edges
/// (edges sharing a tail merge, edges sharing a head merge). Parts are
/// ordered by their smallest edge. This is the canonical most-refined
/// partitioning of the graph.
PassagePartitioning minimal_passages(const Graph::Ref& g);

/// Splits a passage into the minimal passages composing it, ordered by
/// smallest edge.
std::vector<Passage> decompose(const Passage& p);

/// Checks that `parts` forms a passage partitioning of its graph and
/// returns it. Failures are distinguished: empty part, non-passage part,
/// overlapping parts, incomplete cover. Part order is preserved.
PassagePartitioning validate_partitioning(const Graph::Ref& g, std::vector<EdgeSet> parts);

/// True iff one part of the partitioning contains both edges (the
/// equivalence relation a partitioning induces on edges).
bool same_passage(const PassagePartitioning& pp, Edge e1, Edge e2);

}  // namespace passages
