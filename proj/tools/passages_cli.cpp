// Command-line front end: every library operation on edge-list/weights
// files, with deterministic text, JSON and DOT output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "passages/approx.hpp"
#include "passages/counting.hpp"
#include "passages/json_io.hpp"
#include "passages/passage.hpp"
#include "passages/passage_graph.hpp"

using namespace passages;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(Errc::io_error, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string edge_text(const Graph& g, const Edge& e) {
  return g.name(e.tail) + "->" + g.name(e.head);
}

void print_parts(std::ostream& out, const PassagePartitioning& pp) {
  for (std::size_t i = 0; i < pp.size(); ++i) {
    out << 'P' << (i + 1) << ':';
    for (const Edge& e : pp.parts()[i].edges()) out << ' ' << edge_text(*pp.graph(), e);
    out << '\n';
  }
}

// "a b,a c" or "a->b,c->d": comma-separated edges in edge-line syntax.
std::vector<std::pair<std::string, std::string>> parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream entry(item);
    std::string x, y;
    if (auto arrow = item.find("->"); arrow != std::string::npos) {
      std::istringstream lhs(item.substr(0, arrow)), rhs(item.substr(arrow + 2));
      if (!(lhs >> x) || !(rhs >> y)) {
        throw Error(Errc::parse_error, "malformed edge '" + item + "'");
      }
    } else if (!(entry >> x >> y)) {
      throw Error(Errc::parse_error, "malformed edge '" + item + "'");
    }
    out.emplace_back(x, y);
  }
  if (out.empty()) {
    throw Error(Errc::parse_error, "empty edge list");
  }
  return out;
}

bool color_errors() {
  const char* env = std::getenv("PASSAGE_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  return isatty(fileno(stderr)) != 0;
}

void report_error(const std::string& message) {
  if (color_errors()) {
    std::cerr << "\033[31merror:\033[0m " << message << '\n';
  } else {
    std::cerr << "error: " << message << '\n';
  }
}

const auto kDecimal = CLI::Validator(
    [](std::string& s) -> std::string {
      try {
        rational_from_decimal(s);
        return {};
      } catch (const Error&) {
        return "'" + s + "' is not a decimal number";
      }
    },
    "DECIMAL");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"passage decomposition of directed graphs"};
  app.require_subcommand(1);
  std::ostringstream out;

  // minimal
  std::string minimal_input;
  bool minimal_json = false;
  auto* minimal = app.add_subcommand("minimal", "print the minimal passage partitioning");
  minimal->add_option("input", minimal_input, "edge-list file, or - for stdin")->required();
  minimal->add_flag("--json", minimal_json, "emit JSON");
  minimal->callback([&] {
    auto g = parse_graph(read_input(minimal_input));
    auto pp = minimal_passages(g);
    if (minimal_json) out << partitioning_json(pp).dump() << '\n';
    else print_parts(out, pp);
  });

  // check
  std::string check_input, check_edges;
  auto* check = app.add_subcommand("check", "test whether an edge set is a passage");
  check->add_option("input", check_input, "edge-list file, or - for stdin")->required();
  check->add_option("--edges", check_edges, "comma-separated edges, e.g. \"a b,a c\"")
      ->required();
  check->callback([&] {
    auto g = parse_graph(read_input(check_input));
    auto set = EdgeSet::from_names(g, parse_edge_list(check_edges));
    out << (is_passage(set) ? "true" : "false") << '\n';
  });

  // passages
  std::string enum_input;
  std::uint64_t enum_limit = 1000;
  auto* enumerate = app.add_subcommand("passages", "enumerate all passages (JSON lines)");
  enumerate->add_option("input", enum_input, "edge-list file, or - for stdin")->required();
  enumerate->add_option("--limit", enum_limit, "maximum number of items")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  enumerate->callback([&] {
    auto g = parse_graph(read_input(enum_input));
    PassageEnumerator stream(g, enum_limit);
    while (auto p = stream.next()) out << passage_json(*p).dump() << '\n';
    if (stream.truncated()) out << nlohmann::json{{"truncated", true}}.dump() << '\n';
  });

  // partitionings
  std::string part_input;
  std::uint64_t part_limit = 1000;
  auto* partitionings =
      app.add_subcommand("partitionings", "enumerate all passage partitionings (JSON lines)");
  partitionings->add_option("input", part_input, "edge-list file, or - for stdin")->required();
  partitionings->add_option("--limit", part_limit, "maximum number of items")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  partitionings->callback([&] {
    auto g = parse_graph(read_input(part_input));
    PartitioningEnumerator stream(g, part_limit);
    while (auto pp = stream.next()) out << partitioning_json(*pp).dump() << '\n';
    if (stream.truncated()) out << nlohmann::json{{"truncated", true}}.dump() << '\n';
  });

  // count
  std::string count_input;
  bool count_json = false;
  auto* count = app.add_subcommand("count", "count passages and partitionings");
  count->add_option("input", count_input, "edge-list file, or - for stdin")->required();
  count->add_flag("--json", count_json, "emit JSON");
  count->callback([&] {
    auto g = parse_graph(read_input(count_input));
    auto c = count_passages(g);
    if (count_json) {
      out << nlohmann::json{{"k", c.minimal_count},
                            {"passages", c.passages.str()},
                            {"partitionings", c.partitionings.str()}}
                 .dump()
          << '\n';
    } else {
      out << "k=" << c.minimal_count << '\n'
          << "passages=" << c.passages.str() << '\n'
          << "partitionings=" << c.partitionings.str() << '\n';
    }
  });

  // classify
  std::string classify_input;
  bool classify_json = false;
  auto* classify = app.add_subcommand(
      "classify", "classify vertices against the minimal partitioning");
  classify->add_option("input", classify_input, "edge-list file, or - for stdin")->required();
  classify->add_flag("--json", classify_json, "emit JSON");
  classify->callback([&] {
    auto g = parse_graph(read_input(classify_input));
    auto classes = classify_vertices(minimal_passages(g));
    if (classify_json) {
      out << classification_json(*g, classes).dump() << '\n';
      return;
    }
    auto line = [&](const char* label, const std::vector<std::uint32_t>& vs) {
      out << label << ':';
      for (std::uint32_t v : vs) out << ' ' << g->name(v);
      out << '\n';
    };
    line("isolated", classes.isolated);
    line("input", classes.input);
    line("output", classes.output);
    line("connecting", classes.connecting);
    line("local", classes.local);
  });

  // pgraph
  std::string pgraph_input, pgraph_labels = "edge-count";
  bool pgraph_dot = false, pgraph_self = false;
  auto* pgraph =
      app.add_subcommand("pgraph", "passage graph of the minimal partitioning");
  pgraph->add_option("input", pgraph_input, "edge-list file, or - for stdin")->required();
  pgraph->add_flag("--dot", pgraph_dot, "emit DOT instead of arc lines");
  pgraph->add_flag("--self-arcs", pgraph_self, "keep self-arcs in DOT output");
  pgraph->add_option("--label-mode", pgraph_labels, "DOT node labels")
      ->check(CLI::IsMember({"index", "edge-count"}))
      ->capture_default_str();
  pgraph->callback([&] {
    auto g = parse_graph(read_input(pgraph_input));
    auto pg = build_passage_graph(minimal_passages(g));
    if (pgraph_dot) {
      DotOptions options;
      options.show_self_arcs = pgraph_self;
      options.label_mode = pgraph_labels == "index" ? DotOptions::LabelMode::index
                                                    : DotOptions::LabelMode::edge_count;
      out << to_dot(pg, options);
    } else {
      for (const auto& [from, to] : pg.arcs) {
        out << 'P' << (from + 1) << " -> P" << (to + 1) << '\n';
      }
    }
  });

  // approx
  std::string approx_weights, approx_mode = "greedy", approx_tau_av;
  std::int64_t approx_tau_big = -1;
  bool approx_json = false;
  auto* approx = app.add_subcommand("approx", "accuracy-driven approximate passages");
  approx->add_option("--weights", approx_weights, "weights file, or - for stdin")->required();
  approx->add_option("--tau-av", approx_tau_av, "bound on the average part size")
      ->check(kDecimal);
  approx->add_option("--tau-big", approx_tau_big, "bound on the biggest part size")
      ->check(CLI::NonNegativeNumber);
  approx->add_option("--mode", approx_mode, "optimization mode")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  approx->add_flag("--json", approx_json, "emit JSON");
  approx->callback([&] {
    auto wg = parse_weighted_graph(read_input(approx_weights));
    std::optional<Rational> tau_av;
    if (!approx_tau_av.empty()) tau_av = rational_from_decimal(approx_tau_av);
    std::optional<std::int64_t> tau_big;
    if (approx->count("--tau-big") > 0) tau_big = approx_tau_big;
    const auto mode = approx_mode == "exact" ? OptimizeMode::exact : OptimizeMode::greedy;
    auto solution = optimize(wg, tau_av, tau_big, mode);

    auto chosen_names = [&] {
      auto arr = nlohmann::json::array();
      for (const Edge& e : solution.chosen) {
        arr.push_back({wg->name(e.tail), wg->name(e.head)});
      }
      return arr;
    };
    if (approx_json) {
      out << nlohmann::json{{"mode", approx_mode},
                            {"chosen", chosen_names()},
                            {"parts", partitioning_json(solution.partitioning)["parts"]},
                            {"av", decimal_string(solution.quality.average)},
                            {"big", std::to_string(solution.quality.biggest)},
                            {"acc", decimal_string(solution.quality.acc)}}
                 .dump()
          << '\n';
      return;
    }
    out << "mode=" << approx_mode << '\n' << "chosen:";
    for (const Edge& e : solution.chosen) {
      out << ' ' << wg->name(e.tail) << "->" << wg->name(e.head);
    }
    out << '\n';
    print_parts(out, solution.partitioning);
    out << "av=" << decimal_string(solution.quality.average) << '\n'
        << "big=" << solution.quality.biggest << '\n'
        << "acc=" << decimal_string(solution.quality.acc) << '\n';
  });

  // stats
  std::string stats_input;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "graph and minimal-partitioning summary");
  stats->add_option("input", stats_input, "edge-list file, or - for stdin")->required();
  stats->add_flag("--json", stats_json, "emit JSON with the full graph");
  stats->callback([&] {
    auto g = parse_graph(read_input(stats_input));
    auto pp = minimal_passages(g);
    const Rational av = pp.size() > 0 ? average_size(pp) : Rational(0);
    const std::size_t big = pp.size() > 0 ? biggest_size(pp) : 0;
    if (stats_json) {
      auto j = graph_json(*g);
      j["k"] = pp.size();
      j["av"] = decimal_string(av);
      j["big"] = std::to_string(big);
      out << j.dump() << '\n';
    } else {
      out << "vertices=" << g->vertex_count() << '\n'
          << "edges=" << g->edge_count() << '\n'
          << "k=" << pp.size() << '\n'
          << "av=" << decimal_string(av) << '\n'
          << "big=" << big << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(e.what());
    std::cerr << "Run with --help for usage.\n";
    return 2;
  } catch (const Error& e) {
    report_error(e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(e.what());
    return 1;
  }

  std::cout << out.str();
  return 0;
}
