#include "topocompat/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <vector>

#include "topocompat/distance.hpp"
#include "topocompat/edge_list_io.hpp"
#include "topocompat/embedding.hpp"
#include "topocompat/report_io.hpp"
#include "topocompat/topologies.hpp"

namespace topo::cli {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ArgumentError("malformed " + std::string(what) + " '" +
                        std::string(text) + "'");
  return value;
}

struct BudgetFlags {
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> time_limit_s;
  std::optional<std::size_t> max_host_order;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "Node-expansion limit")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", time_limit_s, "Wall-time limit, seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-host-order", max_host_order,
                    "Largest host order for generic search")
        ->check(CLI::PositiveNumber);
  }

  SearchBudget resolve() const {
    SearchBudget b;
    std::optional<double> seconds = time_limit_s;
    if (!seconds) {
      if (const char* env = std::getenv("TOPO_COMPAT_TIME_LIMIT")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0))
          throw ArgumentError("TOPO_COMPAT_TIME_LIMIT must be a positive "
                              "number of seconds");
        seconds = v;
      }
    }
    if (seconds)
      b.wall_time_limit = std::chrono::milliseconds(
          std::max<std::int64_t>(1, static_cast<std::int64_t>(*seconds * 1000)));
    if (max_nodes) b.max_nodes_expanded = *max_nodes;
    if (max_host_order) b.max_host_order = *max_host_order;
    return b;
  }
};

void emit_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path.empty())
    write_edge_list(out, g);
  else
    write_edge_list_file(path, g);
}

void print_reports(std::ostream& out, std::string_view format,
                   std::span<const CompatibilityReport> reports) {
  if (format == "csv")
    write_csv(out, reports);
  else if (format == "markdown")
    write_markdown(out, reports);
  else
    write_text(out, reports);
}

void print_cycle(std::ostream& out, std::span<const Vertex> cycle) {
  out << "cycle:";
  for (Vertex v : cycle) out << ' ' << v;
  out << '\n';
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.first = r.last = parse_uint(text, "range");
  } else {
    r.first = parse_uint(text.substr(0, dots), "range start");
    r.last = parse_uint(text.substr(dots + 2), "range end");
  }
  if (r.first > r.last)
    throw ArgumentError("empty range '" + std::string(text) + "'");
  return r;
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Topological compatibility of parallel tasks and systems",
               "topo-compat"};
  app.require_subcommand(1, 1);

  std::string spec_text, out_path, task_text, system_text, format = "text";
  std::string s_text, reach_text;
  std::uint32_t reach = 1;
  bool witness = false;
  BudgetFlags budget_flags;

  auto* gen = app.add_subcommand("gen", "Write a topology as an edge list");
  gen->add_option("spec", spec_text, "Topology spec")->required();
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* power = app.add_subcommand("power", "Write graph_power(spec, reach)");
  power->add_option("spec", spec_text, "Topology spec")->required();
  power->add_option("--reach", reach, "Reachability")->required();
  power->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* potential =
      app.add_subcommand("potential", "Parallelism potential and index");
  potential->add_option("--task", task_text, "star or ring")->required();
  potential->add_option("--system", system_text, "System spec")->required();
  potential->add_option("--reach", reach, "Reachability")->required();
  potential->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  potential->add_flag("--witness", witness, "Print a certificate");
  budget_flags.add_to(potential);

  auto* table = app.add_subcommand("table", "Hypercube compatibility table");
  table->add_option("--task", task_text, "star or ring")->required();
  table->add_option("--s", s_text, "Dimension range A..B")->required();
  table->add_option("--reach", reach_text, "Reachability range A..B")
      ->required();
  table->add_option("--format", format, "text, csv or markdown")
      ->check(CLI::IsMember({"text", "csv", "markdown"}));

  auto* embed = app.add_subcommand("embed", "Embed a task graph in a system");
  embed->add_option("--task", task_text, "Task spec")->required();
  embed->add_option("--system", system_text, "System spec")->required();
  embed->add_option("--reach", reach, "Reachability");
  embed->add_flag("--witness", witness, "Print the vertex mapping");
  budget_flags.add_to(embed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit_graph(make_graph(TopologySpec::parse(spec_text)), out_path, out);
    } else if (power->parsed()) {
      emit_graph(graph_power(make_graph(TopologySpec::parse(spec_text)), reach),
                 out_path, out);
    } else if (potential->parsed()) {
      const auto task = parse_task_kind(task_text);
      const auto system = TopologySpec::parse(system_text);
      const auto budget = budget_flags.resolve();
      const auto report = evaluate(system, task, reach, budget);
      if (format == "csv")
        write_csv(out, std::span(&report, 1));
      else
        out << "p=" << report.potential_p << " c=" << report.index_rounded
            << '\n';
      if (witness && task == TaskKind::ring && report.potential_p > 0) {
        if (system.kind == TopologyKind::hypercube) {
          print_cycle(out, gray_code_cycle(system.parameter));
        } else {
          const auto host = graph_power(make_graph(system), reach);
          const auto cycle = longest_cycle(host, budget);
          if (cycle.witness) print_cycle(out, *cycle.witness);
        }
      }
    } else if (table->parsed()) {
      const auto reports = compatibility_table(
          parse_range(s_text), parse_range(reach_text), parse_task_kind(task_text));
      print_reports(out, format, reports);
    } else if (embed->parsed()) {
      const auto task = make_graph(TopologySpec::parse(task_text));
      const auto host =
          graph_power(make_graph(TopologySpec::parse(system_text)), reach);
      const auto e = find_embedding(task, host, budget_flags.resolve());
      if (!e) {
        out << "no embedding\n";
      } else {
        out << "embedding found\n";
        if (witness)
          for (Vertex t = 0; t < e->mapping.size(); ++t)
            out << t << " -> " << e->mapping[t] << '\n';
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "topo-compat: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "topo-compat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace topo::cli
