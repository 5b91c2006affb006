#include "passages/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace passages {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

void check_name(std::string_view name, std::size_t line_no) {
  if (!valid_vertex_name(name)) {
    parse_fail(line_no, "invalid vertex name '" + std::string(name) + "'");
  }
}

// Yields (1-based line number, trimmed content) for non-blank, non-comment lines.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view body = trim(line);
    if (!body.empty() && body.front() != '#') fn(line_no, body);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

bool valid_vertex_name(std::string_view name) noexcept {
  if (name.empty() || name == "node" || name.front() == '#') return false;
  if (name.find("->") != std::string_view::npos) return false;
  for (char c : name) {
    if (is_space(c)) return false;
  }
  return true;
}

Graph::Ref Graph::create(std::span<const std::string> vertex_names,
                         std::span<const std::pair<std::string, std::string>> edges) {
  std::vector<std::string> names;
  names.reserve(vertex_names.size() + edges.size() * 2);
  auto add_name = [&](const std::string& n) {
    if (!valid_vertex_name(n)) {
      throw Error(Errc::invalid_name, "invalid vertex name '" + n + "'");
    }
    names.push_back(n);
  };
  for (const auto& n : vertex_names) add_name(n);
  for (const auto& [t, h] : edges) {
    add_name(t);
    add_name(h);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto g = std::shared_ptr<Graph>(new Graph());
  g->names_ = std::move(names);

  auto index = [&](const std::string& n) {
    auto it = std::lower_bound(g->names_.begin(), g->names_.end(), n);
    return static_cast<std::uint32_t>(it - g->names_.begin());
  };
  g->edges_.reserve(edges.size());
  for (const auto& [t, h] : edges) {
    g->edges_.push_back(Edge{index(t), index(h)});
  }
  std::sort(g->edges_.begin(), g->edges_.end());
  g->edges_.erase(std::unique(g->edges_.begin(), g->edges_.end()), g->edges_.end());

  const std::uint32_t v = g->vertex_count();
  const std::uint32_t e = g->edge_count();

  g->tail_offsets_.assign(v + 1, 0);
  for (const Edge& ed : g->edges_) ++g->tail_offsets_[ed.tail + 1];
  for (std::uint32_t i = 0; i < v; ++i) g->tail_offsets_[i + 1] += g->tail_offsets_[i];

  g->head_offsets_.assign(v + 1, 0);
  for (const Edge& ed : g->edges_) ++g->head_offsets_[ed.head + 1];
  for (std::uint32_t i = 0; i < v; ++i) g->head_offsets_[i + 1] += g->head_offsets_[i];
  g->by_head_.resize(e);
  std::vector<std::uint32_t> cursor(g->head_offsets_.begin(), g->head_offsets_.end() - 1);
  for (std::uint32_t id = 0; id < e; ++id) {
    g->by_head_[cursor[g->edges_[id].head]++] = id;
  }
  return g;
}

std::optional<std::uint32_t> Graph::index_of(std::string_view name) const noexcept {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::optional<std::uint32_t> Graph::edge_id(Edge e) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::uint32_t>(it - edges_.begin());
}

std::optional<Edge> Graph::find_edge(std::string_view tail, std::string_view head) const noexcept {
  auto t = index_of(tail);
  auto h = index_of(head);
  if (!t || !h) return std::nullopt;
  Edge e{*t, *h};
  if (!contains(e)) return std::nullopt;
  return e;
}

std::pair<std::uint32_t, std::uint32_t> Graph::tail_range(std::uint32_t vertex) const {
  return {tail_offsets_.at(vertex), tail_offsets_.at(vertex + 1)};
}

std::span<const std::uint32_t> Graph::head_ids(std::uint32_t vertex) const {
  return std::span<const std::uint32_t>(by_head_).subspan(
      head_offsets_.at(vertex), head_offsets_.at(vertex + 1) - head_offsets_.at(vertex));
}

WeightedGraph::Ref WeightedGraph::create(
    std::span<const std::string> vertex_names,
    std::span<const std::tuple<std::string, std::string, std::int64_t>> scaled_weights) {
  std::vector<std::string> names;
  auto add_name = [&](const std::string& n) {
    if (!valid_vertex_name(n)) {
      throw Error(Errc::invalid_name, "invalid vertex name '" + n + "'");
    }
    names.push_back(n);
  };
  for (const auto& n : vertex_names) add_name(n);
  for (const auto& [t, h, w] : scaled_weights) {
    add_name(t);
    add_name(h);
    if (w < -kWeightScale || w > kWeightScale) {
      throw Error(Errc::weight_out_of_range,
                  "weight for (" + t + ", " + h + ") outside [-1, 1]");
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto wg = std::shared_ptr<WeightedGraph>(new WeightedGraph());
  wg->names_ = std::move(names);
  auto index = [&](const std::string& n) {
    auto it = std::lower_bound(wg->names_.begin(), wg->names_.end(), n);
    return static_cast<std::uint32_t>(it - wg->names_.begin());
  };
  for (const auto& [t, h, w] : scaled_weights) {
    wg->weights_.emplace_back(Edge{index(t), index(h)}, w);
  }
  std::sort(wg->weights_.begin(), wg->weights_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < wg->weights_.size(); ++i) {
    if (wg->weights_[i].first == wg->weights_[i - 1].first) {
      const Edge e = wg->weights_[i].first;
      throw Error(Errc::duplicate_weight, "duplicate weight for (" + wg->names_[e.tail] +
                                              ", " + wg->names_[e.head] + ")");
    }
  }
  return wg;
}

std::optional<std::uint32_t> WeightedGraph::index_of(std::string_view name) const noexcept {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::int64_t WeightedGraph::scaled_weight(Edge pair) const noexcept {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), pair,
                             [](const auto& entry, Edge e) { return entry.first < e; });
  if (it == weights_.end() || it->first != pair) return 0;
  return it->second;
}

Graph::Ref parse_graph(std::string_view text) {
  std::vector<std::string> isolated;
  std::vector<std::pair<std::string, std::string>> edges;

  for_each_line(text, [&](std::size_t line_no, std::string_view body) {
    if (auto arrow = body.find("->"); arrow != std::string_view::npos) {
      std::string_view lhs = trim(body.substr(0, arrow));
      std::string_view rhs = trim(body.substr(arrow + 2));
      if (lhs.empty() || rhs.empty() || split_tokens(lhs).size() != 1 ||
          split_tokens(rhs).size() != 1) {
        parse_fail(line_no, "expected 'x -> y'");
      }
      check_name(lhs, line_no);
      check_name(rhs, line_no);
      edges.emplace_back(std::string(lhs), std::string(rhs));
      return;
    }
    auto tokens = split_tokens(body);
    if (tokens.size() != 2) {
      parse_fail(line_no, "expected 'x y', 'x -> y' or 'node z'");
    }
    if (tokens[0] == "node") {
      check_name(tokens[1], line_no);
      isolated.emplace_back(tokens[1]);
      return;
    }
    if (tokens[1] == "node") {
      parse_fail(line_no, "'node' is reserved and cannot be an edge endpoint");
    }
    check_name(tokens[0], line_no);
    check_name(tokens[1], line_no);
    edges.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
  });

  return Graph::create(isolated, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  std::vector<bool> touched(g.vertex_count(), false);
  for (const Edge& e : g.edges()) {
    touched[e.tail] = true;
    touched[e.head] = true;
    out << g.name(e.tail) << ' ' << g.name(e.head) << '\n';
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) out << "node " << g.name(v) << '\n';
  }
  return out.str();
}

std::int64_t parse_scaled_weight(std::string_view token) {
  std::string_view rest = token;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::size_t dot = rest.find('.');
  std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw Error(Errc::parse_error, "malformed weight '" + std::string(token) + "'");
  }
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(int_part) || !all_digits(frac_part)) {
    throw Error(Errc::parse_error, "malformed weight '" + std::string(token) + "'");
  }

  std::uint64_t whole = 0;
  for (char c : int_part) {
    whole = whole * 10 + static_cast<std::uint64_t>(c - '0');
    if (whole > 1) break;  // anything past 1 is already out of range
  }
  bool frac_nonzero = frac_part.find_first_not_of('0') != std::string_view::npos;
  if (whole > 1 || (whole == 1 && frac_nonzero)) {
    throw Error(Errc::weight_out_of_range, "weight '" + std::string(token) + "' outside [-1, 1]");
  }
  if (frac_part.size() > 6) {
    // Range is checked first so 1.0000001 reports out-of-range, not precision.
    throw Error(Errc::weight_precision,
                "weight '" + std::string(token) + "' has more than 6 decimal places");
  }
  std::int64_t scaled = static_cast<std::int64_t>(whole) * WeightedGraph::kWeightScale;
  std::int64_t frac = 0;
  for (char c : frac_part) frac = frac * 10 + (c - '0');
  for (std::size_t i = frac_part.size(); i < 6; ++i) frac *= 10;
  scaled += frac;
  return negative ? -scaled : scaled;
}

WeightedGraph::Ref parse_weighted_graph(std::string_view text) {
  std::vector<std::tuple<std::string, std::string, std::int64_t>> entries;

  for_each_line(text, [&](std::size_t line_no, std::string_view body) {
    auto tokens = split_tokens(body);
    if (tokens.size() != 3) {
      parse_fail(line_no, "expected 'x y w'");
    }
    check_name(tokens[0], line_no);
    check_name(tokens[1], line_no);
    std::int64_t scaled;
    try {
      scaled = parse_scaled_weight(tokens[2]);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    entries.emplace_back(std::string(tokens[0]), std::string(tokens[1]), scaled);
  });

  return WeightedGraph::create({}, entries);
}

double edge_probability(double weight) {
  if (!(weight >= -1.0 && weight <= 1.0)) {
    throw Error(Errc::weight_out_of_range, "weight outside [-1, 1]");
  }
  return (weight + 1.0) / 2.0;
}

}  // namespace passages
