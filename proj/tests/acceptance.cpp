// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "topocompat/cli.hpp"
#include "topocompat/compat.hpp"
#include "topocompat/distance.hpp"
#include "topocompat/edge_list_io.hpp"
#include "topocompat/embedding.hpp"
#include "topocompat/topologies.hpp"

using namespace topo;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kIndexTolerance = 5e-5;
constexpr double kTableSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr int kRandomInstances = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Every generated topology with at most 256 vertices, thinned for the
// complete graphs whose power transforms are quadratic in size.
std::vector<std::pair<std::string, Graph>> generated_topologies() {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::uint32_t s = 1; s <= 8; ++s)
    out.emplace_back("hypercube:" + std::to_string(s), hypercube(s));
  for (std::uint32_t p = 3; p <= 256; ++p)
    out.emplace_back("ring:" + std::to_string(p), ring(p));
  for (std::uint32_t p = 2; p <= 256; ++p)
    out.emplace_back("star:" + std::to_string(p), star(p));
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 12u, 16u, 32u, 64u,
                          128u, 256u})
    out.emplace_back("complete:" + std::to_string(n), complete(n));
  return out;
}

// Reaches worth checking for a graph of diameter d: the small ones where
// structure changes, and the neighbourhood of saturation.
std::vector<std::uint32_t> probe_reaches(std::uint32_t d) {
  std::vector<std::uint32_t> r{1, 2, 3, 4};
  if (d > 1) r.push_back(d - 1);
  r.push_back(std::max(d, 1u));
  r.push_back(d + 1);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::vector<std::vector<std::pair<std::uint64_t, double>>> load_reference_table() {
  std::ifstream in(std::filesystem::path(TOPO_TEST_DATA_DIR) /
                   "reference_star_table.tsv");
  std::vector<std::vector<std::pair<std::uint64_t, double>>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string reach, cell;
    ss >> reach;
    std::vector<std::pair<std::uint64_t, double>> row;
    while (ss >> cell) {
      const auto semi = cell.find(';');
      auto c = cell.substr(semi + 1);
      std::replace(c.begin(), c.end(), ',', '.');
      row.emplace_back(std::stoull(cell.substr(0, semi)), std::stod(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Outcome golden_table() {
  Outcome o;
  const auto expected = load_reference_table();
  const auto t0 = Clock::now();
  const auto table = compatibility_table({2, 8}, {1, 3}, TaskKind::star);
  const double elapsed = seconds_since(t0);
  if (expected.size() != 3) return o.fail("reference table fixture unreadable"), o;
  if (table.size() != 21) return o.fail("expected 21 cells"), o;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto& r = table[k];
    const auto& [p, c] = expected[k / 7].at(k % 7);
    const std::string where = "reach " + std::to_string(r.reach) + ", s " +
                              std::to_string(r.system.parameter);
    if (r.potential_p != p) o.fail(where + ": p mismatch");
    if (std::abs(std::stod(r.index_rounded) - c) > kIndexTolerance)
      o.fail(where + ": rounded index " + r.index_rounded);
    if (!(r.index == Ratio(p, std::uint64_t{1} << r.system.parameter)))
      o.fail(where + ": index is not p / 2^s");
  }
  if (elapsed >= kTableSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "21/21 cells, " + std::to_string(elapsed * 1e3) + " ms";
  return o;
}

Outcome closed_form_vs_search() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (std::uint32_t s = 2; s <= 4; ++s)
    for (std::uint32_t reach = 1; reach <= 3; ++reach) {
      const auto host = graph_power(hypercube(s), reach);
      const auto p = hypercube_star_potential(s, reach);
      const std::string where =
          "s=" + std::to_string(s) + " reach=" + std::to_string(reach);
      const auto task = star(static_cast<std::uint32_t>(p));
      const auto e = find_embedding(task, host);
      if (!e || !verify_embedding(task, host, *e))
        o.fail(where + ": star(" + std::to_string(p) + ") not embedded");
      if (p < host.order() &&
          find_embedding(star(static_cast<std::uint32_t>(p + 1)), host))
        o.fail(where + ": star(" + std::to_string(p + 1) + ") embedded");
      ++checked;
    }
  const double elapsed = seconds_since(t0);
  if (elapsed >= kOracleSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(checked) + " (s, reach) pairs, " +
               std::to_string(elapsed) + " s";
  return o;
}

Outcome ring_compatibility() {
  Outcome o;
  for (std::uint32_t s = 2; s <= 10; ++s) {
    const auto cycle = gray_code_cycle(s);
    const auto h = hypercube(s);
    std::vector<bool> seen(h.order(), false);
    bool ok = cycle.size() == h.order();
    for (std::size_t i = 0; ok && i < cycle.size(); ++i) {
      ok = cycle[i] < h.order() && !seen[cycle[i]] &&
           h.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
      if (ok) seen[cycle[i]] = true;
    }
    if (!ok) o.fail("Gray code is not Hamiltonian for s=" + std::to_string(s));
    const auto rep = evaluate({TopologyKind::hypercube, s, {}}, TaskKind::ring, 1);
    if (rep.potential_p != h.order() || !(rep.index == Ratio(1, 1)))
      o.fail("C_R(H_" + std::to_string(s) + ")_1 != 1");
  }
  if (o.pass) o.detail = "s = 2..10, C_R = 1";
  return o;
}

Outcome bipartite_exclusion() {
  Outcome o;
  for (std::uint32_t s = 2; s <= 4; ++s)
    for (std::uint32_t p = 3; p <= 7; p += 2)
      if (find_embedding(ring(p), graph_power(hypercube(s), 1)))
        o.fail("ring(" + std::to_string(p) + ") embedded in H_" +
               std::to_string(s));
  if (embeddable_ring_orders(hypercube(3), 8) !=
      std::set<std::uint32_t>{4, 6, 8})
    o.fail("embeddable_ring_orders(H_3, 8) != {4, 6, 8}");
  if (o.pass) o.detail = "odd rings absent for s = 2..4; H_3 orders {4, 6, 8}";
  return o;
}

Outcome power_properties() {
  Outcome o;
  std::size_t graphs = 0, checks = 0;
  for (const auto& [name, g] : generated_topologies()) {
    ++graphs;
    if (!(graph_power(g, 1) == g)) o.fail(name + ": power 1 differs");
    const auto diam = *diameter(g);
    if (!(graph_power(g, std::max(diam, 1u)) ==
          complete(static_cast<std::uint32_t>(g.order()))))
      o.fail(name + ": power at diameter is not complete");

    const auto reaches = probe_reaches(diam);
    for (auto r : reaches) {
      const auto lo = graph_power(g, r);
      const auto hi = graph_power(g, r + 1);
      for (const auto& [u, v] : lo.edges())
        if (!hi.has_edge(u, v)) {
          o.fail(name + ": edge lost between reach " + std::to_string(r) +
                 " and " + std::to_string(r + 1));
          break;
        }
      std::size_t best_ball = 0;
      for (Vertex v = 0; v < g.order(); ++v)
        best_ball = std::max(best_ball, ball_size(g, v, r));
      if (max_star_order(lo) != best_ball)
        o.fail(name + ": max_star_order != max ball at reach " +
               std::to_string(r));
      ++checks;
    }
  }
  if (o.pass)
    o.detail = std::to_string(graphs) + " topologies, " +
               std::to_string(checks) + " (graph, reach) checks";
  return o;
}

Outcome monotonicity_and_decay() {
  Outcome o;
  std::vector<std::pair<std::string, Graph>> systems;
  for (std::uint32_t s = 1; s <= 4; ++s)
    systems.emplace_back("hypercube:" + std::to_string(s), hypercube(s));
  for (std::uint32_t p = 3; p <= 16; ++p)
    systems.emplace_back("ring:" + std::to_string(p), ring(p));
  for (std::uint32_t p = 2; p <= 16; ++p)
    systems.emplace_back("star:" + std::to_string(p), star(p));
  for (std::uint32_t n = 1; n <= 10; ++n)
    systems.emplace_back("complete:" + std::to_string(n), complete(n));

  for (const auto& [name, g] : systems) {
    const auto diam = *diameter(g);
    std::uint64_t prev_star = 0, prev_ring = 0;
    for (std::uint32_t r = 1; r <= diam + 1; ++r) {
      const auto sp = star_potential(g, r);
      const auto rp = ring_potential(g, r);
      if (sp < prev_star) o.fail(name + ": star potential decreased");
      if (rp < prev_ring) o.fail(name + ": ring potential decreased");
      prev_star = sp;
      prev_ring = rp;
    }
  }

  const auto table = compatibility_table({2, 8}, {1, 3}, TaskKind::star);
  for (std::size_t k = 1; k < table.size(); ++k) {
    const auto& prev = table[k - 1];
    const auto& cur = table[k];
    if (cur.reach != prev.reach) continue;
    if (prev.index == Ratio(1, 1) && cur.index == Ratio(1, 1)) continue;
    // a/b > c/d  <=>  a*d > c*b
    if (!(prev.index.num() * cur.index.den() > cur.index.num() * prev.index.den()))
      o.fail("C_Z not strictly decreasing at reach " +
             std::to_string(cur.reach) + ", s " +
             std::to_string(cur.system.parameter));
  }
  if (o.pass)
    o.detail = std::to_string(systems.size()) +
               " systems nondecreasing; C_Z strictly decreasing below 1";
  return o;
}

Outcome soundness_completeness() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> task_n(1, 6), host_n(1, 12);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  int found = 0, absent = 0;
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto task = oracle::random_graph(task_n(rng), density(rng), rng);
    const auto host = oracle::random_graph(host_n(rng), density(rng), rng);
    const auto e = find_embedding(task, host);
    if (e && !verify_embedding(task, host, *e))
      o.fail("instance " + std::to_string(i) + ": invalid embedding");
    if (e.has_value() != oracle::embeds_exhaustive(task, host))
      o.fail("instance " + std::to_string(i) + ": decision disagrees");
    (e ? found : absent)++;
  }
  if (o.pass)
    o.detail = std::to_string(kRandomInstances) + " instances (" +
               std::to_string(found) + " embeddable, " +
               std::to_string(absent) + " not)";
  return o;
}

Outcome cli_contract() {
  Outcome o;
  const auto run = [](std::vector<std::string> args, std::string& out) {
    args.insert(args.begin(), "topo-compat");
    std::ostringstream os, es;
    const int code = cli::run(args, os, es);
    out = os.str();
    return code;
  };
  std::string out;

  if (run({"potential", "--task", "star", "--system", "hypercube:5",
           "--reach", "2"}, out) != 0 || out != "p=16 c=0.5000\n")
    o.fail("potential example printed '" + out + "'");

  if (run({"table", "--task", "star", "--s", "2..8", "--reach", "1..3",
           "--format", "markdown"}, out) != 0)
    o.fail("table example failed");
  std::istringstream md(out);
  std::string line;
  int lines = 0, cells = 0;
  while (std::getline(md, line)) {
    ++lines;
    if (line.rfind("| p_Z", 0) != 0) continue;
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, '|');  // before the leading bar
    std::getline(fields, field, '|');  // row label
    while (std::getline(fields, field, '|'))
      if (field.find(';') != std::string::npos) ++cells;
  }
  if (lines != 6 || cells != 21 || out.find("93; 0.3633") == std::string::npos)
    o.fail("markdown table malformed");

  if (run({"embed", "--task", "ring:3", "--system", "hypercube:3", "--reach",
           "1"}, out) != 0 || out != "no embedding\n")
    o.fail("embed example printed '" + out + "'");

  const auto dir = std::filesystem::temp_directory_path() / "topo_compat_acc";
  std::filesystem::create_directories(dir);
  const auto file = dir / "custom.txt";
  {
    std::ofstream f(file);
    f << "# petersen-ish fragment\n5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n";
  }
  for (const std::string& spec : std::vector<std::string>{"hypercube:5", "ring:9", "star:6",
                                 "complete:7", "file:" + file.string()}) {
    if (run({"gen", spec}, out) != 0) {
      o.fail("gen " + spec + " failed");
      continue;
    }
    std::istringstream in(out);
    if (!(read_edge_list(in) == make_graph(TopologySpec::parse(spec))))
      o.fail("gen round trip differs for " + spec);
  }
  if (o.pass) o.detail = "3 examples, 5 round trips";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 golden table reproduction", golden_table},
      {"2 closed form vs brute-force search", closed_form_vs_search},
      {"3 ring compatibility via Gray code", ring_compatibility},
      {"4 bipartite exclusion of odd rings", bipartite_exclusion},
      {"5 power-transform properties", power_properties},
      {"6 monotonicity in reach, decay in s", monotonicity_and_decay},
      {"7 embedding soundness/completeness", soundness_completeness},
      {"8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail
              << std::endl;
    if (!o.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
