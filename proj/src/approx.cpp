#include "passages/approx.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace passages {

namespace {

using boost::multiprecision::cpp_int;

struct SubsetShape {
  std::int64_t edge_count = 0;
  std::int64_t part_count = 0;
  std::int64_t biggest = 0;
};

// Shape of the minimal passage partitioning of a pair subset: merge pairs
// sharing a tail, merge pairs sharing a head, read off the classes.
class ShapeScratch {
 public:
  explicit ShapeScratch(std::uint32_t vertex_count)
      : first_tail_(vertex_count, -1), first_head_(vertex_count, -1) {}

  SubsetShape compute(std::span<const Edge> pairs) {
    parent_.resize(pairs.size());
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(first_tail_.begin(), first_tail_.end(), -1);
    std::fill(first_head_.begin(), first_head_.end(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (first_tail_[pairs[i].tail] < 0) first_tail_[pairs[i].tail] = static_cast<int>(i);
      else merge(static_cast<int>(i), first_tail_[pairs[i].tail]);
      if (first_head_[pairs[i].head] < 0) first_head_[pairs[i].head] = static_cast<int>(i);
      else merge(static_cast<int>(i), first_head_[pairs[i].head]);
    }
    SubsetShape shape;
    shape.edge_count = static_cast<std::int64_t>(pairs.size());
    class_size_.assign(pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) ++class_size_[find(static_cast<int>(i))];
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (class_size_[i] > 0) {
        ++shape.part_count;
        shape.biggest = std::max(shape.biggest, class_size_[i]);
      }
    }
    return shape;
  }

  // Root of the class of pair index i; roots are minimal, so the root's pair
  // is the lexicographically smallest edge of the part when pairs are sorted.
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::int64_t class_size(int root) const { return class_size_[root]; }

 private:
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

  std::vector<int> parent_;
  std::vector<int> first_tail_;
  std::vector<int> first_head_;
  std::vector<std::int64_t> class_size_;
};

bool shape_feasible(const SubsetShape& shape, const std::optional<Rational>& tau_av,
                    const std::optional<std::int64_t>& tau_big) {
  if (shape.part_count == 0) return true;  // nothing to bound
  if (tau_big && shape.biggest > *tau_big) return false;
  if (tau_av && Rational(shape.edge_count, shape.part_count) > *tau_av) return false;
  return true;
}

ApproxSolution assemble(const WeightedGraph& wg, std::vector<Edge> chosen,
                        std::int64_t chosen_weight, std::int64_t positive_total,
                        OptimizeMode mode) {
  std::vector<std::pair<std::string, std::string>> name_pairs;
  name_pairs.reserve(chosen.size());
  for (const Edge& e : chosen) name_pairs.emplace_back(wg.name(e.tail), wg.name(e.head));

  Graph::Ref graph = Graph::create(wg.vertex_names(), name_pairs);
  PassagePartitioning partitioning = minimal_passages(graph);
  PartitionQuality quality;
  if (partitioning.size() > 0) {
    quality.average = average_size(partitioning);
    quality.biggest = static_cast<std::int64_t>(biggest_size(partitioning));
  }
  quality.acc =
      positive_total > 0 ? Rational(chosen_weight, positive_total) : Rational(1);
  return ApproxSolution{std::move(chosen), std::move(graph), std::move(partitioning),
                        std::move(quality), mode};
}

}  // namespace

Rational average_size(const PassagePartitioning& pp) {
  if (pp.size() == 0) {
    throw Error(Errc::empty_partitioning, "average size of an empty partitioning");
  }
  return Rational(pp.graph()->edge_count(), pp.size());
}

std::size_t biggest_size(const PassagePartitioning& pp) {
  if (pp.size() == 0) {
    throw Error(Errc::empty_partitioning, "biggest size of an empty partitioning");
  }
  std::size_t biggest = 0;
  for (const Passage& p : pp.parts()) biggest = std::max(biggest, p.size());
  return biggest;
}

Rational accuracy(const WeightedGraph& wg, std::span<const Edge> chosen) {
  std::vector<Edge> unique(chosen.begin(), chosen.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::int64_t numerator = 0;
  for (const Edge& e : unique) {
    if (e.tail >= wg.vertex_count() || e.head >= wg.vertex_count()) {
      throw Error(Errc::unknown_vertex, "chosen pair references an unknown vertex");
    }
    numerator += wg.scaled_weight(e);
  }
  std::int64_t denominator = 0;
  for (const auto& [pair, w] : wg.scaled_weights()) {
    if (w > 0) denominator += w;
  }
  if (denominator == 0) {
    if (numerator == 0) return Rational(1);
    throw Error(Errc::degenerate_instance,
                "no positive weights but the chosen set has nonzero total weight");
  }
  return Rational(numerator, denominator);
}

ApproxSolution optimize(const WeightedGraph::Ref& wg, std::optional<Rational> tau_av,
                        std::optional<std::int64_t> tau_big, OptimizeMode mode) {
  // Candidate pairs: the nonzero-weight pairs, lexicographic order.
  std::vector<std::pair<Edge, std::int64_t>> candidates;
  std::int64_t positive_total = 0;
  for (const auto& [pair, w] : wg->scaled_weights()) {
    if (w != 0) candidates.emplace_back(pair, w);
    if (w > 0) positive_total += w;
  }

  ShapeScratch scratch(wg->vertex_count());

  if (mode == OptimizeMode::exact) {
    if (candidates.size() > 20) {
      throw Error(Errc::instance_too_large,
                  "exact mode handles at most 20 nonzero-weight pairs, got " +
                      std::to_string(candidates.size()));
    }
    const std::uint32_t m = static_cast<std::uint32_t>(candidates.size());
    std::vector<Edge> subset;
    subset.reserve(m);

    std::uint32_t best_mask = 0;  // empty set: feasible, weight 0
    std::int64_t best_weight = positive_total > 0 ? std::numeric_limits<std::int64_t>::min() : 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      subset.clear();
      std::int64_t weight = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        if (mask & (1u << i)) {
          subset.push_back(candidates[i].first);
          weight += candidates[i].second;
        }
      }
      if (positive_total == 0 && mask != 0) continue;  // only the empty choice scores
      if (!shape_feasible(scratch.compute(subset), tau_av, tau_big)) continue;
      if (weight > best_weight) {  // acc is weight / positive_total
        best_weight = weight;
        best_mask = mask;
      }
    }

    std::vector<Edge> chosen;
    std::int64_t chosen_weight = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (best_mask & (1u << i)) {
        chosen.push_back(candidates[i].first);
        chosen_weight += candidates[i].second;
      }
    }
    return assemble(*wg, std::move(chosen), chosen_weight, positive_total, mode);
  }

  // Greedy: start from every positive pair; while a bound is violated, drop
  // the lowest-weight edge of the biggest part and re-partition.
  std::vector<std::pair<Edge, std::int64_t>> chosen;
  for (const auto& c : candidates) {
    if (c.second > 0) chosen.push_back(c);
  }
  std::vector<Edge> pairs;
  for (;;) {
    pairs.clear();
    for (const auto& c : chosen) pairs.push_back(c.first);
    const SubsetShape shape = scratch.compute(pairs);
    if (shape_feasible(shape, tau_av, tau_big)) break;

    // Biggest part, ties by smallest edge: roots are minimal pair indices,
    // so the first root with maximal class size wins.
    int target_root = -1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const int root = scratch.find(static_cast<int>(i));
      if (root == static_cast<int>(i) && scratch.class_size(root) == shape.biggest) {
        target_root = root;
        break;
      }
    }
    // Lowest weight within the part, ties by edge order.
    std::size_t drop = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (scratch.find(static_cast<int>(i)) != target_root) continue;
      if (drop == pairs.size() || chosen[i].second < chosen[drop].second) drop = i;
    }
    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  std::vector<Edge> chosen_pairs;
  std::int64_t chosen_weight = 0;
  for (const auto& c : chosen) {
    chosen_pairs.push_back(c.first);
    chosen_weight += c.second;
  }
  return assemble(*wg, std::move(chosen_pairs), chosen_weight, positive_total, mode);
}

Rational rational_from_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const std::size_t dot = rest.find('.');
  std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) ||
      !all_digits(frac_part)) {
    throw Error(Errc::parse_error, "malformed decimal '" + std::string(text) + "'");
  }
  cpp_int numerator = 0;
  for (char c : int_part) numerator = numerator * 10 + (c - '0');
  cpp_int denominator = 1;
  for (char c : frac_part) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

std::string decimal_string(const Rational& value) {
  cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);  // > 0, reduced
  const bool negative = num < 0;
  if (negative) num = -num;

  // Millionths, rounded half away from zero.
  const cpp_int scaled = (num * 1'000'000 * 2 + den) / (den * 2);
  const cpp_int whole = scaled / 1'000'000;
  cpp_int frac = scaled % 1'000'000;

  std::string out = whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.' + digits;
  }
  if (negative && scaled != 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace passages
