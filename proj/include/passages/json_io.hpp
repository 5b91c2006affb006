#pragma once

#include <json.hpp>

#include "passages/approx.hpp"
#include "passages/passage.hpp"
#include "passages/passage_graph.hpp"

namespace passages {

// JSON shapes used by the CLI. All arrays come out in deterministic
// (lexicographic) order so output is byte-stable.

/// {"vertices": ["a", ...], "edges": [["a","b"], ...]}
nlohmann::json graph_json(const Graph& g);

/// [["a","b"], ...]
nlohmann::json edges_json(const Graph& g, const std::vector<Edge>& edges);

/// {"edges": [["a","b"], ...]}
nlohmann::json passage_json(const Passage& p);

/// {"parts": [{"edges": [...]}, ...]}
nlohmann::json partitioning_json(const PassagePartitioning& pp);

/// {"isolated": [...], "input": [...], "output": [...], "connecting": [...],
///  "local": [...]}
nlohmann::json classification_json(const Graph& g, const VertexClassification& c);

}  // namespace passages
