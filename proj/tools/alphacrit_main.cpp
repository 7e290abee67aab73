// Command line surface over the alphacrit core: stability numbers,
// compositions, maximal alpha-1 families, census streams, and the
// verification suites. graph6 in, human tables or JSON envelopes out.
//
// Exit codes: 0 success, 1 property failure, 2 parse, 3 capacity,
// 4 invalid argument, 5 enumeration cap.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alphacrit/census.hpp"
#include "alphacrit/critical.hpp"
#include "alphacrit/error.hpp"
#include "alphacrit/graph.hpp"
#include "alphacrit/graph6.hpp"
#include "alphacrit/ops.hpp"
#include "alphacrit/solver.hpp"
#include "alphacrit/verify.hpp"

#ifndef ALPHACRIT_VERSION
#define ALPHACRIT_VERSION "0.0.0"
#endif

namespace {

using alphacrit::CensusFilter;
using alphacrit::EdgeRef;
using alphacrit::Errc;
using alphacrit::EVPartition;
using alphacrit::Graph;
using alphacrit::JoinQuadruple;
using alphacrit::SplitPartition;
using alphacrit::SweepOptions;
using alphacrit::SweepResult;
using alphacrit::VertexSet;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad command line text that is not a graph6 problem; maps to exit 2.
struct CliParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// The envelope shared by every JSON-mode command.
void emit_report(const std::string& command,
                 const std::vector<std::string>& inputs, json result,
                 Clock::time_point start) {
  json report;
  report["command"] = command;
  report["inputs"] = inputs;
  report["result"] = std::move(result);
  report["timing_ms"] = elapsed_ms(start);
  report["version"] = ALPHACRIT_VERSION;
  std::cout << report.dump(2) << "\n";
}

std::string trimmed(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

// Positional graph6 arguments, or one graph per stdin line when none given.
std::vector<std::string> gather_graph6(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    const std::string t = trimmed(line);
    if (!t.empty()) lines.push_back(t);
  }
  return lines;
}

// Comma-separated vertex ids; "-" (or nothing) is the empty set.
std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0)
      throw CliParseError("bad vertex id '" + item + "' in list '" + text +
                          "'");
    out.push_back(v);
  }
  return out;
}

EdgeRef parse_edge(const std::string& text) {
  const std::vector<int> pair = parse_vertex_list(text);
  if (pair.size() != 2)
    throw CliParseError("an edge is two comma-separated vertex ids, got '" +
                        text + "'");
  return EdgeRef(pair[0], pair[1]);
}

std::string set_text(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

json edges_json(const std::vector<EdgeRef>& edges) {
  json out = json::array();
  for (const EdgeRef& e : edges) out.push_back(json::array({e.u, e.v}));
  return out;
}

int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// ---------------------------------------------------------------- alpha ----

int cmd_alpha(const std::vector<std::string>& args, bool count,
              bool json_mode) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs = gather_graph6(args);
  if (inputs.empty())
    throw CliParseError("no graphs given on argv or standard input");

  json rows = json::array();
  std::vector<std::vector<std::string>> table;
  for (const std::string& text : inputs) {
    const Graph g = alphacrit::parse_graph6(text);
    const alphacrit::CriticalityReport crit = alphacrit::is_alpha_critical(g);
    const alphacrit::StabilityReport rep = alphacrit::alpha(g, count);

    json row;
    row["graph6"] = text;
    row["n"] = g.vertex_count();
    row["edges"] = g.edge_count();
    row["alpha"] = rep.alpha;
    row["witness"] = rep.witness.members();
    row["defect"] = crit.defect;
    row["tau"] = crit.tau;
    row["is_alpha_critical"] = crit.is_alpha_critical;
    row["critical_edges"] = edges_json(crit.critical_edges);
    if (count) row["num_maximum"] = *rep.num_maximum;
    rows.push_back(std::move(row));

    std::vector<std::string> cells{
        text,
        std::to_string(g.vertex_count()),
        std::to_string(g.edge_count()),
        std::to_string(rep.alpha),
        std::to_string(crit.tau),
        std::to_string(crit.defect),
        crit.is_alpha_critical ? "yes" : "no",
        std::to_string(crit.critical_edges.size()) + "/" +
            std::to_string(g.edge_count()),
        set_text(rep.witness.members())};
    if (count) cells.push_back(std::to_string(*rep.num_maximum));
    table.push_back(std::move(cells));
  }

  if (json_mode) {
    emit_report("alpha", inputs, json{{"graphs", std::move(rows)}}, start);
    return 0;
  }

  std::vector<std::string> header{"graph6", "n",          "m",
                                  "alpha",  "tau",        "defect",
                                  "crit",   "crit-edges", "witness"};
  if (count) header.push_back("maximum");
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& cells : table) width[c] = std::max(width[c], cells[c].size());
  }
  auto print_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      std::cout << std::left << std::setw(static_cast<int>(width[c]) + 2)
                << cells[c];
    std::cout << "\n";
  };
  print_row(header);
  for (const auto& cells : table) print_row(cells);
  return 0;
}

// -------------------------------------------------------------- compose ----

int finish_compose(const std::string& op,
                   const std::vector<std::string>& inputs,
                   const std::vector<const Graph*>& blocks,
                   const Graph& result, json detail, bool with_alpha,
                   bool json_mode, Clock::time_point start) {
  json res;
  res["operation"] = op;
  for (auto& [key, value] : detail.items()) res[key] = value;
  res["output"] = alphacrit::to_graph6(result);
  res["n"] = result.vertex_count();
  res["edges"] = result.edge_count();
  json sizes = json::array();
  for (const Graph* b : blocks)
    sizes.push_back(json{{"n", b->vertex_count()}, {"edges", b->edge_count()}});
  res["input_sizes"] = std::move(sizes);

  std::vector<int> alpha_in;
  int alpha_out = 0;
  if (with_alpha) {
    json ab = json::array();
    for (const Graph* b : blocks) {
      alpha_in.push_back(alphacrit::stability_number(*b));
      ab.push_back(alpha_in.back());
    }
    alpha_out = alphacrit::stability_number(result);
    res["alpha_inputs"] = std::move(ab);
    res["alpha_output"] = alpha_out;
  }

  if (json_mode) {
    emit_report("compose", inputs, std::move(res), start);
    return 0;
  }
  std::cout << alphacrit::to_graph6(result) << "\n";
  std::ostringstream note;
  note << op << ": n";
  for (std::size_t i = 0; i < blocks.size(); ++i)
    note << (i ? "+" : " ") << blocks[i]->vertex_count();
  note << " -> " << result.vertex_count() << ", edges " << result.edge_count();
  if (with_alpha) {
    note << ", alpha";
    for (std::size_t i = 0; i < alpha_in.size(); ++i)
      note << (i ? "+" : " ") << alpha_in[i];
    note << " -> " << alpha_out;
  }
  std::cerr << note.str() << "\n";
  return 0;
}

// -------------------------------------------------------------- maximal ----

int cmd_maximal(const std::vector<std::string>& args, bool json_mode) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs = gather_graph6(args);
  if (inputs.size() != 1)
    throw CliParseError("maximal takes exactly one graph6 string");
  const Graph g = alphacrit::parse_graph6(inputs[0]);
  const std::vector<alphacrit::MaximalEntry> entries =
      alphacrit::enumerate_maximal_alpha_minus_one(g);
  const int alpha = alphacrit::stability_number(g);

  int canonical = 0;
  json list = json::array();
  std::vector<std::pair<std::string, std::string>> table;
  for (const auto& entry : entries) {
    const bool is_canonical = entry.cls == alphacrit::MaximalClass::Canonical;
    canonical += is_canonical ? 1 : 0;
    const std::string cls =
        is_canonical ? "canonical:" + std::to_string(entry.canonical_vertex)
                     : "non-canonical";
    list.push_back(
        json{{"vertices", entry.vertices.members()}, {"class", cls}});
    table.emplace_back(set_text(entry.vertices.members()), cls);
  }

  if (json_mode) {
    json res;
    res["graph6"] = inputs[0];
    res["n"] = g.vertex_count();
    res["alpha"] = alpha;
    res["count"] = entries.size();
    res["canonical"] = canonical;
    res["non_canonical"] = static_cast<int>(entries.size()) - canonical;
    res["entries"] = std::move(list);
    emit_report("maximal", inputs, std::move(res), start);
    return 0;
  }

  std::cout << "alpha " << alpha << ", " << entries.size()
            << " maximal alpha-1 vertex sets (" << canonical << " canonical)\n";
  std::size_t width = 0;
  for (const auto& [vs, cls] : table) width = std::max(width, vs.size());
  for (const auto& [vs, cls] : table)
    std::cout << "  " << std::left << std::setw(static_cast<int>(width) + 2)
              << vs << cls << "\n";
  return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const std::string& suite, const SweepOptions& opt,
               bool json_mode) {
  const auto start = Clock::now();
  const std::vector<SweepResult> results = alphacrit::run_suites(suite, opt);
  bool all_pass = true;
  for (const SweepResult& r : results) all_pass = all_pass && r.pass();

  if (json_mode) {
    json suites = json::array();
    for (const SweepResult& r : results) {
      json failures = json::array();
      for (const auto& f : r.failures)
        failures.push_back(
            json{{"instance", f.instance}, {"message", f.message}});
      suites.push_back(json{{"suite", r.suite},
                            {"checked", r.checked},
                            {"pass", r.pass()},
                            {"failures", std::move(failures)}});
    }
    json res;
    res["pass"] = all_pass;
    res["options"] = json{{"max_n", opt.max_n},
                          {"instances", opt.instances},
                          {"seed", opt.seed},
                          {"threads", opt.threads}};
    res["suites"] = std::move(suites);
    emit_report("verify", {}, std::move(res), start);
  } else {
    for (const SweepResult& r : results) {
      std::cout << std::left << std::setw(16) << r.suite << "checked="
                << std::setw(8) << r.checked
                << (r.pass() ? "pass" : "FAIL") << "\n";
      for (const auto& f : r.failures)
        std::cout << "    " << f.instance << ": " << f.message << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------ enumerate ----

int cmd_enumerate(int n, const std::string& filter_name,
                  const std::string& format, bool connected,
                  std::optional<int> want_defect) {
  if (n < 1)
    throw CliParseError("enumerate needs a positive vertex count");
  if (n > 8)
    throw alphacrit::Error(Errc::TooLargeForEnumeration,
                           "exhaustive enumeration capped at 8 vertices, got " +
                               std::to_string(n));
  CensusFilter filter = CensusFilter::AlphaCritical;
  if (filter_name == "all")
    filter = connected ? CensusFilter::Connected : CensusFilter::All;
  else if (filter_name == "basic")
    filter = CensusFilter::Basic;

  for (int k = 1; k <= n; ++k) {
    for (const std::string& text : alphacrit::census_level(k, filter)) {
      const Graph g = alphacrit::parse_graph6(text);
      const alphacrit::CriticalityReport crit = alphacrit::is_alpha_critical(g);
      if (want_defect && crit.defect != *want_defect) continue;
      if (format == "json") {
        json line;
        line["graph6"] = text;
        line["n"] = k;
        line["edges"] = g.edge_count();
        line["alpha"] = crit.alpha;
        line["defect"] = crit.defect;
        line["is_alpha_critical"] = crit.is_alpha_critical;
        std::cout << line.dump() << "\n";
      } else {
        std::cout << text << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{
      "alphacrit: exact stability numbers, alpha-critical compositions, and "
      "verification suites for small graphs"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a JSON report envelope on stdout");

  auto* alpha_cmd = app.add_subcommand(
      "alpha", "stability number, defect, and criticality of graphs");
  alpha_cmd->fallthrough();
  std::vector<std::string> alpha_graphs;
  bool alpha_count = false;
  alpha_cmd->add_option("graph6", alpha_graphs,
                        "graph6 strings (stdin lines when omitted)");
  alpha_cmd->add_flag("--count", alpha_count,
                      "also count the maximum stable sets");

  auto* compose_cmd =
      app.add_subcommand("compose", "build a composed graph, graph6 out");
  compose_cmd->require_subcommand(1);
  compose_cmd->fallthrough();
  bool with_alpha = false;
  compose_cmd->add_flag("--with-alpha", with_alpha,
                        "report stability numbers before and after");

  std::string sub_g6, sub_edge;
  auto* subdivide_cmd = compose_cmd->add_subcommand(
      "subdivide", "replace an edge by a three-edge path");
  subdivide_cmd->fallthrough();
  subdivide_cmd->add_option("graph6", sub_g6)->required();
  subdivide_cmd->add_option("edge", sub_edge, "edge as u,v")->required();

  std::string split_g6, split_part1, split_part2;
  int split_v = 0;
  auto* split_cmd = compose_cmd->add_subcommand(
      "split", "split a vertex through a new degree-2 vertex");
  split_cmd->fallthrough();
  split_cmd->add_option("graph6", split_g6)->required();
  split_cmd->add_option("vertex", split_v)->required();
  split_cmd->add_option("part1", split_part1, "neighbors for the first copy")
      ->required();
  split_cmd->add_option("part2", split_part2, "neighbors for the second copy")
      ->required();

  std::string dup_g6;
  int dup_v = 0;
  auto* duplicate_cmd =
      compose_cmd->add_subcommand("duplicate", "add a closed twin of a vertex");
  duplicate_cmd->fallthrough();
  duplicate_cmd->add_option("graph6", dup_g6)->required();
  duplicate_cmd->add_option("vertex", dup_v)->required();

  std::string ev_g6, ev_edge, ev_h6, ev_u1, ev_u2;
  int ev_v = 0;
  auto* ev_cmd = compose_cmd->add_subcommand(
      "ev", "edge-vertex composition: glue h minus a vertex over an edge of g");
  ev_cmd->fallthrough();
  ev_cmd->add_option("graph6", ev_g6, "the edge side g")->required();
  ev_cmd->add_option("edge", ev_edge, "edge of g as u,v")->required();
  ev_cmd->add_option("hgraph6", ev_h6, "the vertex side h")->required();
  ev_cmd->add_option("vertex", ev_v, "vertex of h to dissolve")->required();
  ev_cmd->add_option("u1", ev_u1, "neighbors of the dissolved vertex wired to the first endpoint")
      ->required();
  ev_cmd->add_option("u2", ev_u2, "neighbors wired to the second endpoint")
      ->required();

  std::string join_g6, join_g0, join_h6, join_h0;
  auto* join_cmd = compose_cmd->add_subcommand(
      "join", "1-join: all edges between the designated-set complements");
  join_cmd->fallthrough();
  join_cmd->add_option("graph6", join_g6)->required();
  join_cmd->add_option("g0", join_g0, "designated set of g ('-' for empty)")
      ->required();
  join_cmd->add_option("hgraph6", join_h6)->required();
  join_cmd->add_option("h0", join_h0, "designated set of h ('-' for empty)")
      ->required();

  auto* maximal_cmd = app.add_subcommand(
      "maximal", "maximal alpha-1 induced subgraphs with class labels");
  maximal_cmd->fallthrough();
  std::vector<std::string> maximal_graphs;
  maximal_cmd->add_option("graph6", maximal_graphs,
                          "one graph6 string (stdin when omitted)");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a named property suite, or 'all'");
  verify_cmd->fallthrough();
  std::string suite;
  SweepOptions sweep;
  sweep.threads = default_threads();
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--n", sweep.max_n, "size cap override");
  verify_cmd->add_option("--instances", sweep.instances,
                         "instance count override");
  verify_cmd->add_option("--seed", sweep.seed, "rng seed");
  verify_cmd->add_option("--threads", sweep.threads, "worker pool size");

  auto* enum_cmd = app.add_subcommand(
      "enumerate", "stream the census of all graphs up to n vertices");
  enum_cmd->fallthrough();
  int enum_n = 0;
  std::string enum_filter = "alpha-critical";
  std::string enum_format = "graph6";
  bool enum_connected = false;
  int enum_defect = 0;
  enum_cmd->add_option("n", enum_n, "largest vertex count (at most 8)")
      ->required();
  enum_cmd->add_option("--filter", enum_filter, "class filter")
      ->check(CLI::IsMember({"all", "alpha-critical", "basic"}));
  enum_cmd->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"graph6", "json"}));
  enum_cmd->add_flag("--connected", enum_connected,
                     "restrict the all filter to connected graphs");
  auto* defect_opt = enum_cmd->add_option(
      "--defect", enum_defect, "keep only graphs with this defect");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*alpha_cmd) return cmd_alpha(alpha_graphs, alpha_count, json_mode);

  if (*compose_cmd) {
    const auto start = Clock::now();
    if (*subdivide_cmd) {
      const Graph g = alphacrit::parse_graph6(sub_g6);
      const EdgeRef e = parse_edge(sub_edge);
      const Graph out = alphacrit::odd_subdivide(g, e);
      return finish_compose("subdivide", {sub_g6}, {&g}, out,
                            json{{"edge", json::array({e.u, e.v})}},
                            with_alpha, json_mode, start);
    }
    if (*split_cmd) {
      const Graph g = alphacrit::parse_graph6(split_g6);
      const SplitPartition p{
          alphacrit::make_vertex_set(g, parse_vertex_list(split_part1)),
          alphacrit::make_vertex_set(g, parse_vertex_list(split_part2))};
      const Graph out = alphacrit::split_vertex(g, split_v, p);
      return finish_compose("split", {split_g6}, {&g}, out,
                            json{{"vertex", split_v}}, with_alpha, json_mode,
                            start);
    }
    if (*duplicate_cmd) {
      const Graph g = alphacrit::parse_graph6(dup_g6);
      const Graph out = alphacrit::duplicate_vertex(g, dup_v);
      return finish_compose("duplicate", {dup_g6}, {&g}, out,
                            json{{"vertex", dup_v}}, with_alpha, json_mode,
                            start);
    }
    if (*ev_cmd) {
      const Graph g = alphacrit::parse_graph6(ev_g6);
      const Graph h = alphacrit::parse_graph6(ev_h6);
      const EdgeRef e = parse_edge(ev_edge);
      const EVPartition p{
          alphacrit::make_vertex_set(h, parse_vertex_list(ev_u1)),
          alphacrit::make_vertex_set(h, parse_vertex_list(ev_u2))};
      const Graph out = alphacrit::edge_vertex_compose(g, e, h, ev_v, p);
      return finish_compose("ev", {ev_g6, ev_h6}, {&g, &h}, out,
                            json{{"edge", json::array({e.u, e.v})},
                                 {"vertex", ev_v}},
                            with_alpha, json_mode, start);
    }
    const Graph g = alphacrit::parse_graph6(join_g6);
    const Graph h = alphacrit::parse_graph6(join_h6);
    const JoinQuadruple q{
        g, alphacrit::make_vertex_set(g, parse_vertex_list(join_g0)), h,
        alphacrit::make_vertex_set(h, parse_vertex_list(join_h0))};
    const Graph out = alphacrit::one_join(q);
    return finish_compose("join", {join_g6, join_h6}, {&g, &h}, out,
                          json{{"g0", q.g0.members()}, {"h0", q.h0.members()}},
                          with_alpha, json_mode, start);
  }

  if (*maximal_cmd) return cmd_maximal(maximal_graphs, json_mode);
  if (*verify_cmd) return cmd_verify(suite, sweep, json_mode);
  return cmd_enumerate(enum_n, enum_filter, enum_format, enum_connected,
                       defect_opt->count() > 0 ? std::optional<int>(enum_defect)
                                               : std::nullopt);
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const alphacrit::Error& e) {
    std::cerr << "error [" << alphacrit::errc_name(e.code()) << "]: "
              << e.what() << "\n";
    switch (e.code()) {
      case Errc::MalformedGraph6:
        return 2;
      case Errc::CapacityExceeded:
        return 3;
      case Errc::TooLargeForEnumeration:
        return 5;
      default:
        return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
