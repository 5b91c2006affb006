#include "passages/passage.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace passages {

namespace {

void require_same_graph(const Graph::Ref& a, const Graph::Ref& b) {
  if (a != b) {
    throw Error(Errc::graph_mismatch, "operands are bound to different graphs");
  }
}

std::vector<std::uint32_t> ids_of(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> ids;
  ids.reserve(edges.size());
  for (const Edge& e : edges) {
    auto id = g.edge_id(e);
    if (!id) {
      throw Error(Errc::edge_not_in_graph,
                  "edge (" + g.name(e.tail) + ", " + g.name(e.head) + ") is not in the graph");
    }
    ids.push_back(*id);
  }
  return ids;  // already sorted: edges are sorted and edge ids are order-preserving
}

std::vector<Edge> edges_of(const Graph& g, const std::vector<std::uint32_t>& ids) {
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (std::uint32_t id : ids) edges.push_back(g.edges()[id]);
  return edges;
}

bool is_passage_ids(const Graph& g, const std::vector<std::uint32_t>& ids) {
  std::vector<bool> member(g.edge_count(), false);
  for (std::uint32_t id : ids) member[id] = true;
  for (std::uint32_t id : ids) {
    const Edge e = g.edges()[id];
    auto [tb, te] = g.tail_range(e.tail);
    for (std::uint32_t other = tb; other < te; ++other) {
      if (!member[other]) return false;
    }
    for (std::uint32_t other : g.head_ids(e.head)) {
      if (!member[other]) return false;
    }
  }
  return true;
}

// Saturate: whenever an edge is in, every edge sharing its tail or head is in.
std::vector<std::uint32_t> closure_ids(const Graph& g, std::vector<std::uint32_t> seed) {
  std::vector<bool> member(g.edge_count(), false);
  std::vector<bool> tail_done(g.vertex_count(), false);
  std::vector<bool> head_done(g.vertex_count(), false);
  std::vector<std::uint32_t> stack = seed;
  for (std::uint32_t id : seed) member[id] = true;

  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    const Edge e = g.edges()[id];
    if (!tail_done[e.tail]) {
      tail_done[e.tail] = true;
      auto [tb, te] = g.tail_range(e.tail);
      for (std::uint32_t other = tb; other < te; ++other) {
        if (!member[other]) {
          member[other] = true;
          stack.push_back(other);
        }
      }
    }
    if (!head_done[e.head]) {
      head_done[e.head] = true;
      for (std::uint32_t other : g.head_ids(e.head)) {
        if (!member[other]) {
          member[other] = true;
          stack.push_back(other);
        }
      }
    }
  }

  std::vector<std::uint32_t> result;
  for (std::uint32_t id = 0; id < g.edge_count(); ++id) {
    if (member[id]) result.push_back(id);
  }
  return result;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // keep the smallest edge id as representative
    else parent[a] = b;
  }
};

Passage make_unchecked(Graph::Ref g, const std::vector<std::uint32_t>& ids) {
  return Passage::unchecked(EdgeSet(g, edges_of(*g, ids)));
}

}  // namespace

EdgeSet::EdgeSet(Graph::Ref graph, std::vector<Edge> edges)
    : graph_(std::move(graph)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    if (!graph_->contains(e)) {
      throw Error(Errc::edge_not_in_graph,
                  "edge (" + (e.tail < graph_->vertex_count() ? graph_->name(e.tail) : "?") +
                      ", " + (e.head < graph_->vertex_count() ? graph_->name(e.head) : "?") +
                      ") is not in the graph");
    }
  }
}

EdgeSet EdgeSet::from_names(Graph::Ref graph,
                            std::span<const std::pair<std::string, std::string>> edges) {
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [t, h] : edges) {
    auto ti = graph->index_of(t);
    auto hi = graph->index_of(h);
    if (!ti || !hi) {
      throw Error(Errc::unknown_vertex,
                  "unknown vertex '" + (ti ? h : t) + "'");
    }
    resolved.push_back(Edge{*ti, *hi});
  }
  return EdgeSet(std::move(graph), std::move(resolved));
}

Passage Passage::checked(EdgeSet set) {
  if (!is_passage(set)) {
    throw Error(Errc::not_a_passage, "edge set does not satisfy the passage condition");
  }
  return Passage(std::move(set));
}

Passage Passage::unchecked(EdgeSet set) {
  assert(is_passage(set));
  return Passage(std::move(set));
}

PassagePartitioning PassagePartitioning::unchecked(Graph::Ref graph, std::vector<Passage> parts) {
  return PassagePartitioning(std::move(graph), std::move(parts));
}

bool is_passage(const EdgeSet& s) {
  return is_passage_ids(*s.graph(), ids_of(*s.graph(), s.edges()));
}

bool is_passage(const Graph& g, const EdgeSet& s) {
  if (s.graph().get() != &g) {
    throw Error(Errc::graph_mismatch, "edge set is bound to a different graph");
  }
  return is_passage(s);
}

std::vector<std::uint32_t> initial_vertices(const EdgeSet& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  for (const Edge& e : s.edges()) out.push_back(e.tail);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> terminal_vertices(const EdgeSet& s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  for (const Edge& e : s.edges()) out.push_back(e.head);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Passage union_of(const Passage& p1, const Passage& p2) {
  require_same_graph(p1.graph(), p2.graph());
  std::vector<Edge> merged;
  merged.reserve(p1.size() + p2.size());
  std::set_union(p1.edges().begin(), p1.edges().end(), p2.edges().begin(), p2.edges().end(),
                 std::back_inserter(merged));
  return Passage::unchecked(EdgeSet(p1.graph(), std::move(merged)));
}

Passage intersection_of(const Passage& p1, const Passage& p2) {
  require_same_graph(p1.graph(), p2.graph());
  std::vector<Edge> merged;
  std::set_intersection(p1.edges().begin(), p1.edges().end(), p2.edges().begin(),
                        p2.edges().end(), std::back_inserter(merged));
  return Passage::unchecked(EdgeSet(p1.graph(), std::move(merged)));
}

Passage difference_of(const Passage& p1, const Passage& p2) {
  require_same_graph(p1.graph(), p2.graph());
  std::vector<Edge> merged;
  std::set_difference(p1.edges().begin(), p1.edges().end(), p2.edges().begin(), p2.edges().end(),
                      std::back_inserter(merged));
  return Passage::unchecked(EdgeSet(p1.graph(), std::move(merged)));
}

bool disjoint(const Passage& p1, const Passage& p2) {
  require_same_graph(p1.graph(), p2.graph());
  const auto& a = p1.edges();
  const auto& b = p2.edges();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else return false;
  }
  return true;
}

bool feeds(const Passage& p1, const Passage& p2) {
  require_same_graph(p1.graph(), p2.graph());
  const auto from = terminal_vertices(p1.edge_set());
  const auto to = initial_vertices(p2.edge_set());
  std::size_t i = 0, j = 0;
  while (i < from.size() && j < to.size()) {
    if (from[i] < to[j]) ++i;
    else if (to[j] < from[i]) ++j;
    else return true;
  }
  return false;
}

Passage closure(const EdgeSet& seed) {
  const Graph& g = *seed.graph();
  return make_unchecked(seed.graph(), closure_ids(g, ids_of(g, seed.edges())));
}

Passage minimal_passage_of(const Graph::Ref& g, Edge e) {
  return closure(EdgeSet(g, {e}));
}

PassagePartitioning minimal_passages(const Graph::Ref& g) {
  const std::uint32_t e = g->edge_count();
  UnionFind uf(e);
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
    auto [tb, te] = g->tail_range(v);
    for (std::uint32_t id = tb + 1; id < te; ++id) uf.merge(tb, id);
    auto heads = g->head_ids(v);
    for (std::size_t i = 1; i < heads.size(); ++i) uf.merge(heads[0], heads[i]);
  }

  // Group edge ids by class. Roots are the smallest id of their class, so
  // scanning ids in order yields parts already ordered by smallest edge.
  std::vector<std::uint32_t> root_to_part(e, 0);
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::uint32_t id = 0; id < e; ++id) {
    const std::uint32_t root = uf.find(id);
    if (root == id) {
      root_to_part[root] = static_cast<std::uint32_t>(groups.size());
      groups.emplace_back();
    }
    groups[root_to_part[root]].push_back(id);
  }

  std::vector<Passage> parts;
  parts.reserve(groups.size());
  for (const auto& ids : groups) parts.push_back(make_unchecked(g, ids));
  return PassagePartitioning::unchecked(g, std::move(parts));
}

std::vector<Passage> decompose(const Passage& p) {
  const Graph::Ref& g = p.graph();
  std::vector<bool> member(g->edge_count(), false);
  for (const Edge& e : p.edges()) member[*g->edge_id(e)] = true;

  std::vector<Passage> out;
  const PassagePartitioning minimal = minimal_passages(g);
  for (const Passage& part : minimal.parts()) {
    // p is a passage, so each minimal part is entirely inside or outside it.
    const std::uint32_t representative = *g->edge_id(part.edges().front());
    if (member[representative]) out.push_back(part);
  }
  return out;
}

PassagePartitioning validate_partitioning(const Graph::Ref& g, std::vector<EdgeSet> parts) {
  std::vector<bool> covered(g->edge_count(), false);
  std::vector<Passage> validated;
  validated.reserve(parts.size());

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const EdgeSet& part = parts[i];
    require_same_graph(g, part.graph());
    if (part.empty()) {
      throw Error(Errc::empty_part, "part " + std::to_string(i + 1) + " is empty");
    }
    if (!is_passage(part)) {
      throw Error(Errc::not_a_passage,
                  "part " + std::to_string(i + 1) + " is not a passage");
    }
    for (const Edge& e : part.edges()) {
      const std::uint32_t id = *g->edge_id(e);
      if (covered[id]) {
        throw Error(Errc::part_overlap,
                    "edge (" + g->name(e.tail) + ", " + g->name(e.head) +
                        ") appears in more than one part");
      }
      covered[id] = true;
    }
    validated.push_back(Passage::unchecked(part));
  }

  for (std::uint32_t id = 0; id < g->edge_count(); ++id) {
    if (!covered[id]) {
      const Edge e = g->edges()[id];
      throw Error(Errc::incomplete_cover,
                  "edge (" + g->name(e.tail) + ", " + g->name(e.head) +
                      ") is not covered by any part");
    }
  }
  return PassagePartitioning::unchecked(g, std::move(validated));
}

bool same_passage(const PassagePartitioning& pp, Edge e1, Edge e2) {
  const Graph& g = *pp.graph();
  if (!g.contains(e1) || !g.contains(e2)) {
    const Edge missing = g.contains(e1) ? e2 : e1;
    auto label = [&](std::uint32_t v) {
      return v < g.vertex_count() ? g.name(v) : std::string("?");
    };
    throw Error(Errc::edge_not_in_graph, "edge (" + label(missing.tail) + ", " +
                                             label(missing.head) + ") is not in the graph");
  }
  for (const Passage& part : pp.parts()) {
    const auto& edges = part.edges();
    const bool has1 = std::binary_search(edges.begin(), edges.end(), e1);
    const bool has2 = std::binary_search(edges.begin(), edges.end(), e2);
    if (has1 || has2) return has1 && has2;
  }
  return false;
}

}  // namespace passages
