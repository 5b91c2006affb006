#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "passages/graph.hpp"

using namespace passages;

namespace {

const char* kF1 =
    "a b\n"
    "a c\n"
    "b e\n"
    "b f\n"
    "c f\n"
    "c d\n"
    "d d\n"
    "d f\n";

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("parse_graph collects vertices and edges") {
  auto g = parse_graph("a b\na c");
  CHECK(g->vertex_count() == 3);
  CHECK(g->edge_count() == 2);
  CHECK(g->find_edge("a", "b"));
  CHECK(g->find_edge("a", "c"));
  CHECK_FALSE(g->find_edge("b", "a"));
}

TEST_CASE("parse_graph handles isolated vertices") {
  auto g = parse_graph("node z");
  CHECK(g->vertex_count() == 1);
  CHECK(g->edge_count() == 0);
  CHECK(g->index_of("z"));
}

TEST_CASE("parse_graph on the F1 fixture") {
  auto g = parse_graph(kF1);
  CHECK(g->vertex_count() == 6);
  CHECK(g->edge_count() == 8);
  CHECK(g->find_edge("d", "d"));  // self-loop is a first-class edge
}

TEST_CASE("parse_graph accepts arrow syntax and comments") {
  auto g = parse_graph("# heading\na -> b\n\n  b->c\n");
  CHECK(g->edge_count() == 2);
  CHECK(g->find_edge("b", "c"));
}

TEST_CASE("duplicate edge lines collapse") {
  auto g = parse_graph("a b\na b\na b\n");
  CHECK(g->edge_count() == 1);
}

TEST_CASE("parse_graph reports the offending line") {
  CHECK_THROWS_WITH_AS(parse_graph("a b\na\n"), doctest::Contains("line 2"), Error);
  try {
    parse_graph("a b c\n");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("'node' is rejected as an edge endpoint") {
  CHECK_THROWS_AS(parse_graph("a node\n"), Error);
  CHECK_THROWS_AS(parse_graph("node a b\n"), Error);
}

TEST_CASE("serialize_graph emits sorted edges and node lines") {
  auto g = Graph::create(std::vector<std::string>{},
                         std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
  CHECK(serialize_graph(*g) == "a b\n");

  auto lone = Graph::create(std::vector<std::string>{"a"}, {});
  CHECK(serialize_graph(*lone) == "node a\n");
}

TEST_CASE("round-trip on F1") {
  auto g = parse_graph(kF1);
  auto again = parse_graph(serialize_graph(*g));
  CHECK(again->vertex_names() == g->vertex_names());
  CHECK(again->edges() == g->edges());
}

TEST_CASE("round-trip on random graphs") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 8, 12);
    auto again = parse_graph(serialize_graph(*g));
    CHECK(again->vertex_names() == g->vertex_names());
    CHECK(again->edges() == g->edges());
  }
}

TEST_CASE("interning is a bijection between names and indices") {
  auto g = parse_graph(kF1);
  for (std::uint32_t v = 0; v < g->vertex_count(); ++v) {
    CHECK(g->index_of(g->name(v)) == v);
  }
  CHECK_FALSE(g->index_of("missing"));
}

TEST_CASE("vertex names are validated") {
  CHECK_THROWS_AS(Graph::create(std::vector<std::string>{""}, {}), Error);
  CHECK_THROWS_AS(Graph::create(std::vector<std::string>{"node"}, {}), Error);
  CHECK_THROWS_AS(Graph::create(std::vector<std::string>{"a->b"}, {}), Error);
  CHECK_THROWS_AS(Graph::create(std::vector<std::string>{"#x"}, {}), Error);
}

TEST_CASE("parse_weighted_graph stores exact weights") {
  auto wg = parse_weighted_graph("a b 0.99\n");
  const Edge ab{*wg->index_of("a"), *wg->index_of("b")};
  CHECK(wg->scaled_weight(ab) == 990000);

  auto low = parse_weighted_graph("a b 0.15");
  CHECK(low->scaled_weights().front().second == 150000);
}

TEST_CASE("weights outside [-1,1] are rejected") {
  CHECK_THROWS_AS(parse_weighted_graph("a b 1.5\n"), Error);
  for (const char* text : {"a b 1.0000001", "a b -1.0000001"}) {
    try {
      parse_weighted_graph(text);
      FAIL("expected rejection of " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::weight_out_of_range);
    }
  }
  // exact bounds are fine
  CHECK(parse_weighted_graph("a b 1\nb c -1\n")->scaled_weights().size() == 2);
  CHECK(parse_weighted_graph("a b 1.000000")->scaled_weights().front().second == 1000000);
}

TEST_CASE("weights with more than six decimals are rejected") {
  try {
    parse_weighted_graph("a b 0.1234567");
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::weight_precision);
  }
}

TEST_CASE("duplicate weight pairs are rejected") {
  try {
    parse_weighted_graph("a b 0.5\na b 0.5\n");
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_weight);
  }
}

TEST_CASE("malformed weight lines are rejected") {
  CHECK_THROWS_AS(parse_weighted_graph("a b\n"), Error);
  CHECK_THROWS_AS(parse_weighted_graph("a b x\n"), Error);
  CHECK_THROWS_AS(parse_weighted_graph("a b 1e-3\n"), Error);
  CHECK_THROWS_AS(parse_weighted_graph("a b .\n"), Error);
}

TEST_CASE("absent pairs weigh zero") {
  auto wg = parse_weighted_graph("a b 0.5\n");
  CHECK(wg->scaled_weight(Edge{*wg->index_of("b"), *wg->index_of("a")}) == 0);
}

TEST_CASE("edge_probability maps [-1,1] onto [0,1]") {
  CHECK(edge_probability(1.0) == 1.0);
  CHECK(edge_probability(-1.0) == 0.0);
  CHECK(edge_probability(0.99) == doctest::Approx(0.995).epsilon(1e-12));
  CHECK_THROWS_AS(edge_probability(1.0000001), Error);
  CHECK_THROWS_AS(edge_probability(-2), Error);
}

}  // TEST_SUITE
