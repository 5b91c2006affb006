#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "passages/passage.hpp"

namespace passages {

using Rational = boost::multiprecision::cpp_rational;

/// Average part size |E| / n, exact. Throws on an empty partitioning.
Rational average_size(const PassagePartitioning& pp);

/// Cardinality of the largest part. Throws on an empty partitioning.
std::size_t biggest_size(const PassagePartitioning& pp);

/// Accuracy of an edge choice against a weighted graph: the total weight of
/// the chosen pairs over the best achievable total (the sum of all positive
/// weights). 0/0 counts as 1 (an empty ideal matched by an empty choice);
/// a negative total with a zero denominator is a degenerate instance.
Rational accuracy(const WeightedGraph& wg, std::span<const Edge> chosen);

struct PartitionQuality {
  Rational average;      // 0 when there are no parts
  std::int64_t biggest = 0;
  Rational acc;
};

enum class OptimizeMode { exact, greedy };

/// Result of the accuracy optimization: the chosen pairs, the graph they
/// span together with all weighted-graph vertices, its minimal passage
/// partitioning, and the quality it achieves.
struct ApproxSolution {
  std::vector<Edge> chosen;  // in the weighted graph's index space, sorted
  Graph::Ref graph;
  PassagePartitioning partitioning;
  PartitionQuality quality;
  OptimizeMode mode;
};

/// Picks a subset of the weighted graph's nonzero pairs maximizing accuracy
/// subject to optional bounds on the average and biggest part size of the
/// resulting minimal partitioning. Absent thresholds impose nothing; the
/// empty choice is always feasible.
///
/// exact mode sweeps all subsets of the nonzero pairs (at most 20 of them);
/// greedy mode starts from the positive pairs and repeatedly drops the
/// lowest-weight edge of the largest part until the bounds hold.
ApproxSolution optimize(const WeightedGraph::Ref& wg, std::optional<Rational> tau_av,
                        std::optional<std::int64_t> tau_big, OptimizeMode mode);

/// Parses a plain decimal ("2", "-0.5", "4.25") into an exact rational.
Rational rational_from_decimal(std::string_view text);

/// Decimal rendering of a rational: exact when it terminates within six
/// fractional digits, otherwise rounded half away from zero to six digits;
/// trailing zeros trimmed.
std::string decimal_string(const Rational& value);

}  // namespace passages
