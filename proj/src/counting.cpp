#include "passages/counting.hpp"

#include <algorithm>

namespace passages {

namespace {

std::vector<std::vector<std::uint32_t>> minimal_part_ids(const Graph& g,
                                                         const PassagePartitioning& pp) {
  std::vector<std::vector<std::uint32_t>> parts;
  parts.reserve(pp.size());
  for (const Passage& p : pp.parts()) {
    std::vector<std::uint32_t> ids;
    ids.reserve(p.size());
    for (const Edge& e : p.edges()) ids.push_back(*g.edge_id(e));
    parts.push_back(std::move(ids));
  }
  return parts;
}

Passage passage_from_ids(const Graph::Ref& g, const std::vector<std::uint32_t>& ids) {
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (std::uint32_t id : ids) edges.push_back(g->edges()[id]);
  return Passage::unchecked(EdgeSet(g, std::move(edges)));
}

}  // namespace

BigInt bell_number(std::uint64_t k) {
  if (k == 0) return 1;
  std::vector<BigInt> row{1};
  for (std::uint64_t n = 2; n <= k; ++n) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const BigInt& above : row) next.push_back(next.back() + above);
    row = std::move(next);
  }
  return row.back();
}

PassageCount count_passages(const Graph::Ref& g) {
  PassageCount out;
  out.minimal_count = minimal_passages(g).size();
  out.passages = BigInt(1) << out.minimal_count;
  out.partitionings = bell_number(out.minimal_count);
  return out;
}

PassageEnumerator::PassageEnumerator(Graph::Ref g, std::uint64_t limit)
    : graph_(std::move(g)), limit_(limit) {
  parts_ = minimal_part_ids(*graph_, minimal_passages(graph_));
  // Size-ascending part order makes every successor step non-decreasing in
  // total edge count, which the best-first search relies on. Ties sort by
  // edge ids, i.e. lexicographically by first edge (parts are disjoint).
  std::sort(parts_.begin(), parts_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

bool PassageEnumerator::better(const Candidate& a, const Candidate& b) const {
  if (a.edge_ids.size() != b.edge_ids.size()) return a.edge_ids.size() < b.edge_ids.size();
  return a.edge_ids < b.edge_ids;
}

void PassageEnumerator::push_candidate(std::vector<std::uint32_t> indices) {
  Candidate c;
  c.part_indices = std::move(indices);
  std::size_t total = 0;
  for (std::uint32_t i : c.part_indices) total += parts_[i].size();
  c.edge_ids.reserve(total);
  for (std::uint32_t i : c.part_indices) {
    const auto& ids = parts_[i];
    const std::size_t old = c.edge_ids.size();
    c.edge_ids.insert(c.edge_ids.end(), ids.begin(), ids.end());
    std::inplace_merge(c.edge_ids.begin(), c.edge_ids.begin() + old, c.edge_ids.end());
  }
  pool_.push_back(std::move(c));
  heap_.push_back(static_cast<std::uint32_t>(pool_.size() - 1));
  std::push_heap(heap_.begin(), heap_.end(),
                 [this](std::uint32_t x, std::uint32_t y) { return better(pool_[y], pool_[x]); });
}

// Takes the indices by value: push_candidate may grow the pool and would
// invalidate a reference into it.
void PassageEnumerator::push_successors(std::vector<std::uint32_t> indices) {
  const std::uint32_t k = static_cast<std::uint32_t>(parts_.size());
  const std::uint32_t last = indices.back();
  if (last + 1 >= k) return;
  // Extend with the next part, and swap the last part for the next one.
  // Every subset is reached exactly once this way.
  auto extended = indices;
  extended.push_back(last + 1);
  push_candidate(std::move(extended));
  indices.back() = last + 1;
  push_candidate(std::move(indices));
}

std::optional<Passage> PassageEnumerator::next() {
  if (truncated_) return std::nullopt;
  auto pop_heap_min = [this]() {
    std::pop_heap(heap_.begin(), heap_.end(), [this](std::uint32_t x, std::uint32_t y) {
      return better(pool_[y], pool_[x]);
    });
    const std::uint32_t idx = heap_.back();
    heap_.pop_back();
    return idx;
  };

  if (emitted_ == limit_) {
    truncated_ = !heap_.empty() || !emitted_empty_;
    return std::nullopt;
  }
  if (!emitted_empty_) {
    emitted_empty_ = true;
    ++emitted_;
    if (!parts_.empty()) push_candidate({0});
    return passage_from_ids(graph_, {});
  }
  if (heap_.empty()) return std::nullopt;
  const std::uint32_t idx = pop_heap_min();
  ++emitted_;
  Passage out = passage_from_ids(graph_, pool_[idx].edge_ids);
  push_successors(pool_[idx].part_indices);
  return out;
}

PartitioningEnumerator::PartitioningEnumerator(Graph::Ref g, std::uint64_t limit)
    : graph_(std::move(g)), limit_(limit) {
  parts_ = minimal_part_ids(*graph_, minimal_passages(graph_));
  rgs_.assign(parts_.size(), 0);
}

bool PartitioningEnumerator::advance() {
  // Lexicographically next restricted growth string: bump the rightmost
  // position that may still grow, zero the suffix.
  for (std::size_t i = rgs_.size(); i-- > 1;) {
    std::uint32_t prefix_max = 0;
    for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[j]);
    if (rgs_[i] <= prefix_max) {
      ++rgs_[i];
      std::fill(rgs_.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs_.end(), 0u);
      return true;
    }
  }
  return false;
}

std::optional<PassagePartitioning> PartitioningEnumerator::next() {
  if (exhausted_ || truncated_) return std::nullopt;
  if (emitted_ == limit_) {
    truncated_ = true;
    return std::nullopt;
  }

  // Blocks indexed by label; labels appear in first-use order, so block b
  // contains part b's smallest edge and blocks are already ordered by it.
  std::uint32_t block_count = 0;
  for (std::uint32_t label : rgs_) block_count = std::max(block_count, label + 1);
  if (rgs_.empty()) block_count = 0;
  std::vector<std::vector<std::uint32_t>> blocks(block_count);
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    auto& block = blocks[rgs_[i]];
    const std::size_t old = block.size();
    block.insert(block.end(), parts_[i].begin(), parts_[i].end());
    std::inplace_merge(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(old),
                       block.end());
  }
  std::vector<Passage> out_parts;
  out_parts.reserve(block_count);
  for (const auto& block : blocks) out_parts.push_back(passage_from_ids(graph_, block));

  ++emitted_;
  if (!advance()) exhausted_ = true;
  return PassagePartitioning::unchecked(graph_, std::move(out_parts));
}

}  // namespace passages
