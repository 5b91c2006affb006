#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "passages/counting.hpp"
#include "passages/passage_graph.hpp"

using namespace passages;

namespace {

const char* kF1 = "a b\na c\nb e\nb f\nc f\nc d\nd d\nd f\n";
const char* kF3 = "a b\nb c\n";

std::vector<std::string> names_of(const Graph& g, const std::vector<std::uint32_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

// Random valid partitioning: group the minimal parts with random labels.
PassagePartitioning random_partitioning(const Graph::Ref& g, std::mt19937& rng) {
  auto minimal = minimal_passages(g);
  if (minimal.size() == 0) return minimal;
  std::uniform_int_distribution<std::size_t> label(0, minimal.size() - 1);
  std::vector<std::vector<Edge>> blocks(minimal.size());
  for (const Passage& part : minimal.parts()) {
    auto& block = blocks[label(rng)];
    block.insert(block.end(), part.edges().begin(), part.edges().end());
  }
  std::vector<EdgeSet> sets;
  for (auto& block : blocks) {
    if (!block.empty()) sets.push_back(EdgeSet(g, std::move(block)));
  }
  return validate_partitioning(g, std::move(sets));
}

}  // namespace

TEST_SUITE("passage_graph") {

TEST_CASE("boundary of P2") {
  auto g = parse_graph(kF1);
  auto p2 = minimal_passages(g).parts()[1];
  auto b = boundary(p2);
  CHECK(names_of(*g, b.input) == std::vector<std::string>{"b", "c"});
  CHECK(names_of(*g, b.output) == std::vector<std::string>{"e", "f"});
  CHECK(names_of(*g, b.io) == std::vector<std::string>{"d"});
}

TEST_CASE("boundary of the empty passage and of a self-loop") {
  auto g = parse_graph(kF1);
  auto empty = boundary(Passage::checked(EdgeSet(g, {})));
  CHECK(empty.input.empty());
  CHECK(empty.output.empty());
  CHECK(empty.io.empty());

  auto loop = parse_graph("d d\n");
  auto b = boundary(Passage::checked(EdgeSet(loop, loop->edges())));
  CHECK(b.input.empty());
  CHECK(b.output.empty());
  CHECK(names_of(*loop, b.io) == std::vector<std::string>{"d"});
}

TEST_CASE("classify_vertices on the chain") {
  auto g = parse_graph(kF3);
  auto c = classify_vertices(minimal_passages(g));
  CHECK(names_of(*g, c.input) == std::vector<std::string>{"a"});
  CHECK(names_of(*g, c.output) == std::vector<std::string>{"c"});
  CHECK(names_of(*g, c.connecting) == std::vector<std::string>{"b"});
  CHECK(c.local.empty());
  CHECK(c.isolated.empty());
}

TEST_CASE("classify_vertices on F1 plus an isolated vertex") {
  auto g = parse_graph(std::string(kF1) + "node z\n");
  auto c = classify_vertices(minimal_passages(g));
  CHECK(names_of(*g, c.isolated) == std::vector<std::string>{"z"});
  CHECK(names_of(*g, c.input) == std::vector<std::string>{"a"});
  CHECK(names_of(*g, c.output) == std::vector<std::string>{"e", "f"});
  CHECK(names_of(*g, c.connecting) == std::vector<std::string>{"b", "c"});
  CHECK(names_of(*g, c.local) == std::vector<std::string>{"d"});
}

TEST_CASE("classify_vertices on an edgeless graph") {
  auto g = parse_graph("node z\n");
  auto c = classify_vertices(minimal_passages(g));
  CHECK(names_of(*g, c.isolated) == std::vector<std::string>{"z"});
  CHECK(c.input.empty());
  CHECK(c.output.empty());
  CHECK(c.connecting.empty());
  CHECK(c.local.empty());
}

TEST_CASE("passage graph arcs on the fixtures") {
  auto g = parse_graph(kF1);
  auto pg = build_passage_graph(minimal_passages(g));
  CHECK(pg.arcs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 1}});

  auto chain = parse_graph(kF3);
  auto cg = build_passage_graph(minimal_passages(chain));
  CHECK(cg.arcs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}});

  auto single = validate_partitioning(g, {EdgeSet(g, g->edges())});
  auto sg = build_passage_graph(single);
  CHECK(sg.arcs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}});
}

TEST_CASE("DOT output") {
  auto chain = parse_graph(kF3);
  auto pg = build_passage_graph(minimal_passages(chain));
  CHECK(to_dot(pg) ==
        "digraph passages {\n"
        "  P1 [label=\"P1 (1 edge)\"];\n"
        "  P2 [label=\"P2 (1 edge)\"];\n"
        "  P1 -> P2;\n"
        "}\n");

  auto empty = parse_graph("node z\n");
  CHECK(to_dot(build_passage_graph(minimal_passages(empty))) == "digraph passages { }\n");

  auto g = parse_graph(kF1);
  auto fg = build_passage_graph(minimal_passages(g));
  const std::string hidden = to_dot(fg);  // self-arcs hidden by default
  CHECK(hidden.find("P2 -> P2") == std::string::npos);
  CHECK(hidden.find("P1 -> P2") != std::string::npos);
  DotOptions keep;
  keep.show_self_arcs = true;
  CHECK(to_dot(fg, keep).find("P2 -> P2") != std::string::npos);

  DotOptions plain;
  plain.label_mode = DotOptions::LabelMode::index;
  CHECK(to_dot(fg, plain).find("label") == std::string::npos);
}

TEST_CASE("five classes partition the vertex set") {
  std::mt19937 rng(4100);
  for (int round = 0; round < 60; ++round) {
    auto g = oracle::random_graph(rng, 8, 12);
    auto pp = random_partitioning(g, rng);
    auto c = classify_vertices(pp);

    std::vector<std::uint32_t> all;
    for (const auto* group : {&c.isolated, &c.input, &c.output, &c.connecting, &c.local}) {
      all.insert(all.end(), group->begin(), group->end());
    }
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());  // pairwise disjoint
    CHECK(all.size() == g->vertex_count());
  }
}

TEST_CASE("boundary sets split the touched vertices") {
  std::mt19937 rng(4101);
  for (int round = 0; round < 60; ++round) {
    auto g = oracle::random_graph(rng, 8, 12);
    auto pp = random_partitioning(g, rng);
    for (const Passage& p : pp.parts()) {
      auto b = boundary(p);
      std::vector<std::uint32_t> combined;
      for (const auto* group : {&b.input, &b.output, &b.io}) {
        combined.insert(combined.end(), group->begin(), group->end());
      }
      std::sort(combined.begin(), combined.end());
      CHECK(std::adjacent_find(combined.begin(), combined.end()) == combined.end());

      auto pi1 = initial_vertices(p.edge_set());
      auto pi2 = terminal_vertices(p.edge_set());
      std::vector<std::uint32_t> touched;
      std::set_union(pi1.begin(), pi1.end(), pi2.begin(), pi2.end(),
                     std::back_inserter(touched));
      CHECK(combined == touched);
    }
  }
}

TEST_CASE("arcs agree with a direct feeds recomputation") {
  std::mt19937 rng(4102);
  for (int round = 0; round < 60; ++round) {
    auto g = oracle::random_graph(rng, 8, 12);
    auto pp = random_partitioning(g, rng);
    auto pg = build_passage_graph(pp);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < pp.size(); ++i) {
      for (std::uint32_t j = 0; j < pp.size(); ++j) {
        if (feeds(pp.parts()[i], pp.parts()[j])) expected.emplace_back(i, j);
      }
    }
    CHECK(pg.arcs == expected);
  }
}

TEST_CASE("connecting vertices touch two different parts; isolated touch none") {
  std::mt19937 rng(4103);
  for (int round = 0; round < 40; ++round) {
    auto g = oracle::random_graph(rng, 8, 12);
    auto pp = random_partitioning(g, rng);
    auto c = classify_vertices(pp);
    for (std::uint32_t v : c.connecting) {
      bool witnessed = false;
      for (std::uint32_t i = 0; i < pp.size() && !witnessed; ++i) {
        for (std::uint32_t j = 0; j < pp.size() && !witnessed; ++j) {
          if (i == j) continue;
          auto pi2 = terminal_vertices(pp.parts()[i].edge_set());
          auto pi1 = initial_vertices(pp.parts()[j].edge_set());
          witnessed = std::binary_search(pi2.begin(), pi2.end(), v) &&
                      std::binary_search(pi1.begin(), pi1.end(), v);
        }
      }
      CHECK(witnessed);
    }
    for (std::uint32_t v : c.isolated) {
      for (const Passage& p : pp.parts()) {
        auto b = boundary(p);
        for (const auto* group : {&b.input, &b.output, &b.io}) {
          CHECK_FALSE(std::binary_search(group->begin(), group->end(), v));
        }
      }
    }
  }
}

}  // TEST_SUITE
