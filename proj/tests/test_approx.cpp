#include <doctest.h>

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "oracle.hpp"
#include "passages/approx.hpp"
#include "passages/counting.hpp"

using namespace passages;

namespace {

const char* kF1 = "a b\na c\nb e\nb f\nc f\nc d\nd d\nd f\n";
const char* kF3 = "a b\nb c\n";

Edge pair_of(const WeightedGraph& wg, const char* tail, const char* head) {
  return Edge{*wg.index_of(tail), *wg.index_of(head)};
}

}  // namespace

TEST_SUITE("approx") {

TEST_CASE("average and biggest size") {
  auto g = parse_graph(kF1);
  auto minimal = minimal_passages(g);
  CHECK(average_size(minimal) == 4);
  CHECK(biggest_size(minimal) == 6);

  auto single = validate_partitioning(g, {EdgeSet(g, g->edges())});
  CHECK(average_size(single) == 8);
  CHECK(biggest_size(single) == 8);

  auto chain = parse_graph(kF3);
  auto singletons = minimal_passages(chain);
  CHECK(average_size(singletons) == 1);
  CHECK(biggest_size(singletons) == 1);

  auto empty = minimal_passages(parse_graph("node z\n"));
  CHECK_THROWS_AS(average_size(empty), Error);
  CHECK_THROWS_AS(biggest_size(empty), Error);
}

TEST_CASE("accuracy of an edge choice") {
  auto wg = parse_weighted_graph("a b 0.99\nc d 0.15\ne f -0.5\n");
  const std::vector<Edge> positives{pair_of(*wg, "a", "b"), pair_of(*wg, "c", "d")};
  CHECK(accuracy(*wg, positives) == 1);
  CHECK(accuracy(*wg, {}) == 0);

  const std::vector<Edge> all{pair_of(*wg, "a", "b"), pair_of(*wg, "c", "d"),
                              pair_of(*wg, "e", "f")};
  CHECK(accuracy(*wg, all) == Rational(64, 114));
}

TEST_CASE("accuracy is 1 exactly for the positive pairs") {
  std::mt19937 rng(5100);
  for (int round = 0; round < 40; ++round) {
    auto wg = oracle::random_weighted(rng);
    std::vector<Edge> nonzero, positives;
    for (const auto& [pair, w] : wg->scaled_weights()) {
      if (w != 0) nonzero.push_back(pair);
      if (w > 0) positives.push_back(pair);
    }
    if (positives.empty()) continue;
    for (std::uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
      const auto subset = oracle::mask_edges(nonzero, mask);
      const bool is_positives = subset == positives;
      CHECK((accuracy(*wg, subset) == 1) == is_positives);
    }
  }
}

TEST_CASE("degenerate instances") {
  auto wg = parse_weighted_graph("a b -0.5\n");
  CHECK(accuracy(*wg, {}) == 1);  // empty ideal, empty choice
  CHECK_THROWS_AS(accuracy(*wg, std::vector<Edge>{pair_of(*wg, "a", "b")}), Error);
}

TEST_CASE("unconstrained optimization keeps every positive pair") {
  auto wg = parse_weighted_graph("a b 0.9\na c 0.15\nb d 0.8\nc d 0.7\nd e -0.2\n");
  for (auto mode : {OptimizeMode::exact, OptimizeMode::greedy}) {
    auto sol = optimize(wg, std::nullopt, std::nullopt, mode);
    CHECK(sol.chosen.size() == 4);
    CHECK(sol.quality.acc == 1);
  }
}

TEST_CASE("a size bound forces dropping the cheap edge") {
  auto wg = parse_weighted_graph("a b 0.9\na c 0.15\nb d 0.8\nc d 0.7\n");

  // tau_big = 2 is already satisfied by everything
  auto relaxed = optimize(wg, std::nullopt, std::int64_t{2}, OptimizeMode::exact);
  CHECK(relaxed.chosen.size() == 4);
  CHECK(relaxed.quality.acc == 1);

  // tau_big = 1 needs singleton parts: drop (a,c) and (c,d)
  auto tight = optimize(wg, std::nullopt, std::int64_t{1}, OptimizeMode::exact);
  CHECK(tight.chosen ==
        std::vector<Edge>{pair_of(*wg, "a", "b"), pair_of(*wg, "b", "d")});
  CHECK(tight.quality.acc == Rational(1'700'000, 2'550'000));
  CHECK(tight.quality.biggest == 1);

  auto greedy = optimize(wg, std::nullopt, std::int64_t{1}, OptimizeMode::greedy);
  CHECK(greedy.quality.acc == tight.quality.acc);
  CHECK(greedy.quality.biggest == 1);
}

TEST_CASE("all-negative weights choose nothing") {
  auto wg = parse_weighted_graph("a b -0.5\nb c -0.9\n");
  for (auto mode : {OptimizeMode::exact, OptimizeMode::greedy}) {
    auto sol = optimize(wg, Rational(2), std::int64_t{1}, mode);
    CHECK(sol.chosen.empty());
    CHECK(sol.quality.acc == 1);
    CHECK(sol.partitioning.size() == 0);
  }
}

TEST_CASE("exact mode refuses oversized instances") {
  std::vector<std::tuple<std::string, std::string, std::int64_t>> entries;
  for (int i = 0; i < 21; ++i) {
    entries.emplace_back("s" + std::to_string(i), "t" + std::to_string(i), 1000);
  }
  auto wg = WeightedGraph::create({}, entries);
  CHECK_THROWS_AS(optimize(wg, std::nullopt, std::int64_t{1}, OptimizeMode::exact), Error);
  CHECK_NOTHROW(optimize(wg, std::nullopt, std::int64_t{1}, OptimizeMode::greedy));
}

TEST_CASE("exact matches the subset sweep, greedy never beats it") {
  std::mt19937 rng(5101);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> big_bound(1, 5);
  std::uniform_int_distribution<int> av_num(1, 8);

  for (int round = 0; round < 60; ++round) {
    auto wg = oracle::random_weighted(rng);
    std::optional<Rational> tau_av;
    std::optional<std::int64_t> tau_big;
    if (coin(rng) != 0) tau_big = big_bound(rng);
    if (coin(rng) != 0) tau_av = Rational(av_num(rng), 2);

    const auto best = oracle::sweep(*wg, tau_av, tau_big);
    REQUIRE(best.found);  // the empty subset is always feasible

    auto exact = optimize(wg, tau_av, tau_big, OptimizeMode::exact);
    CHECK(exact.quality.acc == best.acc);

    auto greedy = optimize(wg, tau_av, tau_big, OptimizeMode::greedy);
    CHECK(greedy.quality.acc <= exact.quality.acc);

    for (const auto& sol : {exact, greedy}) {
      if (sol.partitioning.size() > 0) {
        if (tau_big) CHECK(sol.quality.biggest <= *tau_big);
        if (tau_av) CHECK(sol.quality.average <= *tau_av);
        // reported quality matches a recomputation from the partitioning
        CHECK(sol.quality.average == average_size(sol.partitioning));
        CHECK(sol.quality.biggest ==
              static_cast<std::int64_t>(biggest_size(sol.partitioning)));
      } else {
        CHECK(sol.chosen.empty());
      }
      CHECK(sol.quality.acc <= 1);
      // the partitioning really is the minimal one of (V, chosen)
      CHECK(sol.partitioning == minimal_passages(sol.graph));
    }
  }
}

TEST_CASE("greedy only ever removes from the positive pairs") {
  std::mt19937 rng(5102);
  for (int round = 0; round < 40; ++round) {
    auto wg = oracle::random_weighted(rng);
    std::vector<Edge> positives;
    for (const auto& [pair, w] : wg->scaled_weights()) {
      if (w > 0) positives.push_back(pair);
    }
    auto sol = optimize(wg, Rational(1), std::nullopt, OptimizeMode::greedy);
    CHECK(sol.chosen.size() <= positives.size());
    CHECK(std::includes(positives.begin(), positives.end(), sol.chosen.begin(),
                        sol.chosen.end()));
  }
}

TEST_CASE("decimal parsing and rendering") {
  CHECK(rational_from_decimal("2") == 2);
  CHECK(rational_from_decimal("-0.5") == Rational(-1, 2));
  CHECK(rational_from_decimal("4.25") == Rational(17, 4));
  CHECK_THROWS_AS(rational_from_decimal("x"), Error);
  CHECK_THROWS_AS(rational_from_decimal("1e3"), Error);
  CHECK_THROWS_AS(rational_from_decimal("."), Error);

  CHECK(decimal_string(Rational(4)) == "4");
  CHECK(decimal_string(Rational(1, 2)) == "0.5");
  CHECK(decimal_string(Rational(8, 3)) == "2.666667");
  CHECK(decimal_string(Rational(-8, 3)) == "-2.666667");
  CHECK(decimal_string(Rational(64, 114)) == "0.561404");
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(Rational(-1, 100000000)) == "0");  // rounds to zero
}

}  // TEST_SUITE
