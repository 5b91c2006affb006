#pragma once

#include <stdexcept>
#include <string>

namespace passages {

enum class Errc {
  io_error,
  parse_error,
  invalid_name,
  weight_out_of_range,
  weight_precision,
  duplicate_weight,
  unknown_vertex,
  edge_not_in_graph,
  graph_mismatch,
  not_a_passage,
  empty_part,
  part_overlap,
  incomplete_cover,
  empty_partitioning,
  degenerate_instance,
  instance_too_large,
};

/// Library error. `code()` identifies the failure class so callers can
/// distinguish e.g. an overlap from an incomplete cover without string
/// matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace passages
