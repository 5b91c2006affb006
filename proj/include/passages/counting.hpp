#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "passages/passage.hpp"

namespace passages {

using BigInt = boost::multiprecision::cpp_int;

/// k-th Bell number (partitions of a k-element set), exact, via the Bell
/// triangle.
BigInt bell_number(std::uint64_t k);

/// Exact census of a graph's passages: k minimal non-empty passages give
/// 2^k passages and Bell(k) passage partitionings.
struct PassageCount {
  std::size_t minimal_count = 0;
  BigInt passages;
  BigInt partitionings;
};

PassageCount count_passages(const Graph::Ref& g);

/// Streams every passage of the graph exactly once, ordered by edge count
/// and then lexicographically by edge list. Stops after `limit` items;
/// `truncated()` tells whether anything was cut off. Single consumer.
class PassageEnumerator {
 public:
  PassageEnumerator(Graph::Ref g, std::uint64_t limit);

  std::optional<Passage> next();
  bool truncated() const noexcept { return truncated_; }

 private:
  // Subsets of minimal passages, enumerated best-first. Candidates store the
  // chosen part indices (ascending, over parts sorted by size then edges)
  // and the edge ids of their union.
  struct Candidate {
    std::vector<std::uint32_t> part_indices;
    std::vector<std::uint32_t> edge_ids;
  };

  bool better(const Candidate& a, const Candidate& b) const;
  void push_successors(std::vector<std::uint32_t> indices);
  void push_candidate(std::vector<std::uint32_t> indices);

  Graph::Ref graph_;
  std::vector<std::vector<std::uint32_t>> parts_;  // sorted by (size, edge ids)
  std::vector<Candidate> pool_;
  std::vector<std::uint32_t> heap_;  // indices into pool_, min-heap by `better`
  std::uint64_t limit_;
  std::uint64_t emitted_ = 0;
  bool emitted_empty_ = false;
  bool truncated_ = false;
};

/// Streams every passage partitioning exactly once: set partitions of the
/// minimal passages, generated as restricted growth strings in lexicographic
/// order, each block merged into one passage. Stops after `limit` items.
class PartitioningEnumerator {
 public:
  PartitioningEnumerator(Graph::Ref g, std::uint64_t limit);

  std::optional<PassagePartitioning> next();
  bool truncated() const noexcept { return truncated_; }

 private:
  bool advance();

  Graph::Ref graph_;
  std::vector<std::vector<std::uint32_t>> parts_;  // minimal parts in canonical order
  std::vector<std::uint32_t> rgs_;
  std::uint64_t limit_;
  std::uint64_t emitted_ = 0;
  bool exhausted_ = false;
  bool truncated_ = false;
};

}  // namespace passages
