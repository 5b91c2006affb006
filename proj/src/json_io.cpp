#include "passages/json_io.hpp"

namespace passages {

nlohmann::json edges_json(const Graph& g, const std::vector<Edge>& edges) {
  auto arr = nlohmann::json::array();
  for (const Edge& e : edges) {
    arr.push_back({g.name(e.tail), g.name(e.head)});
  }
  return arr;
}

nlohmann::json graph_json(const Graph& g) {
  return {{"vertices", g.vertex_names()}, {"edges", edges_json(g, g.edges())}};
}

nlohmann::json passage_json(const Passage& p) {
  return {{"edges", edges_json(*p.graph(), p.edges())}};
}

nlohmann::json partitioning_json(const PassagePartitioning& pp) {
  auto parts = nlohmann::json::array();
  for (const Passage& p : pp.parts()) parts.push_back(passage_json(p));
  return {{"parts", parts}};
}

nlohmann::json classification_json(const Graph& g, const VertexClassification& c) {
  auto names = [&](const std::vector<std::uint32_t>& vs) {
    auto arr = nlohmann::json::array();
    for (std::uint32_t v : vs) arr.push_back(g.name(v));
    return arr;
  };
  return {{"isolated", names(c.isolated)},   {"input", names(c.input)},
          {"output", names(c.output)},       {"connecting", names(c.connecting)},
          {"local", names(c.local)}};
}

}  // namespace passages
