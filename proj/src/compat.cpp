#include "topocompat/compat.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "topocompat/distance.hpp"
#include "topocompat/errors.hpp"

namespace topo {

namespace {

constexpr std::uint32_t kMaxClosedFormDimension = 62;

__extension__ using Wide = unsigned __int128;

void check_reach(std::uint32_t reach) {
  if (reach == 0)
    throw InvalidReachability("reachability must be at least 1");
}

bool is_gray_hamiltonian(const std::vector<Vertex>& cycle, std::uint32_t s) {
  const std::size_t n = std::size_t{1} << s;
  if (cycle.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = cycle[i];
    if (v >= n || seen[v]) return false;
    seen[v] = true;
    if (std::popcount(v ^ cycle[(i + 1) % n]) != 1) return false;
  }
  return true;
}

std::uint64_t hypercube_ring_potential(std::uint32_t s) {
  if (s < 2) return 0;
  const auto cycle = gray_code_cycle(s);
  if (!is_gray_hamiltonian(cycle, s))
    throw std::logic_error("Gray code is not a Hamiltonian cycle");
  return cycle.size();
}

CompatibilityReport make_report(const TopologySpec& system, TaskKind task,
                                std::uint32_t reach, std::uint64_t n,
                                std::uint64_t p) {
  CompatibilityReport r{system, task, reach, n, p, compatibility_index(p, n),
                        {}};
  r.index_rounded = r.index.rounded(4);
  return r;
}

}  // namespace

std::string_view to_string(TaskKind kind) {
  return kind == TaskKind::star ? "star" : "ring";
}

TaskKind parse_task_kind(std::string_view text) {
  if (text == "star") return TaskKind::star;
  if (text == "ring") return TaskKind::ring;
  throw ParseError("task kind must be 'star' or 'ring', got '" +
                   std::string(text) + "'");
}

Ratio::Ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidPotential("ratio with zero denominator");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Ratio::rounded(int digits) const {
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // floor(num/den * scale + 1/2)
  const Wide scaled =
      (static_cast<Wide>(num_) * scale * 2 + den_) /
      (static_cast<Wide>(den_) * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = std::to_string(static_cast<std::uint64_t>(scaled % scale));
  std::string out = std::to_string(whole);
  if (digits > 0)
    out += "." + std::string(digits - frac.size(), '0') + frac;
  return out;
}

std::uint64_t hypercube_star_potential(std::uint32_t s, std::uint32_t reach) {
  if (s == 0 || s > kMaxClosedFormDimension)
    throw InvalidParameter("hypercube dimension must be in 1..62, got " +
                           std::to_string(s));
  check_reach(reach);
  // C(s, i) * (s - i) is exactly divisible by i + 1 and fits in 64 bits
  // for s <= 62.
  std::uint64_t term = 1, sum = 1;
  for (std::uint32_t i = 0; i < reach && i < s; ++i) {
    term = term * (s - i) / (i + 1);
    sum += term;
  }
  return sum;
}

std::uint64_t star_potential(const Graph& system, std::uint32_t reach) {
  return max_star_order(graph_power(system, reach));
}

std::uint64_t ring_potential(const Graph& system, std::uint32_t reach,
                             const SearchBudget& budget) {
  check_reach(reach);
  if (system.order() < 3) return 0;
  return longest_cycle(graph_power(system, reach), budget).length;
}

std::uint64_t ring_potential(const TopologySpec& system, std::uint32_t reach,
                             const SearchBudget& budget) {
  check_reach(reach);
  if (system.kind == TopologyKind::hypercube) {
    if (system.parameter == 0 || system.parameter > kMaxHypercubeDimension)
      throw InvalidParameter("hypercube dimension out of range");
    return hypercube_ring_potential(system.parameter);
  }
  return ring_potential(make_graph(system), reach, budget);
}

Ratio compatibility_index(std::uint64_t p, std::uint64_t n) {
  if (n == 0) throw InvalidPotential("system order must be positive");
  if (p > n)
    throw InvalidPotential("potential " + std::to_string(p) +
                           " exceeds system order " + std::to_string(n));
  return Ratio(p, n);
}

CompatibilityReport evaluate(const TopologySpec& system, TaskKind task,
                             std::uint32_t reach, const SearchBudget& budget) {
  check_reach(reach);
  if (system.kind == TopologyKind::hypercube) {
    const std::uint32_t s = system.parameter;
    if (s == 0 || s > kMaxHypercubeDimension)
      throw InvalidParameter("hypercube dimension out of range");
    const std::uint64_t n = std::uint64_t{1} << s;
    const auto p = task == TaskKind::star ? hypercube_star_potential(s, reach)
                                          : hypercube_ring_potential(s);
    return make_report(system, task, reach, n, p);
  }
  const Graph g = make_graph(system);
  const auto p = task == TaskKind::star ? star_potential(g, reach)
                                        : ring_potential(g, reach, budget);
  return make_report(system, task, reach, g.order(), p);
}

std::vector<CompatibilityReport> compatibility_table(IntRange s_range,
                                                     IntRange reach_range,
                                                     TaskKind task) {
  if (s_range.first > s_range.last || reach_range.first > reach_range.last)
    throw InvalidParameter("table ranges must be nonempty");
  if (s_range.first == 0) throw InvalidParameter("s must be at least 1");
  check_reach(reach_range.first);
  const std::uint32_t max_s = task == TaskKind::star ? kMaxClosedFormDimension
                                                     : kMaxHypercubeDimension;
  if (s_range.last > max_s)
    throw InvalidParameter("s must be at most " + std::to_string(max_s) +
                           " for " + std::string(to_string(task)) + " tables");

  const std::size_t cols = s_range.last - s_range.first + 1;
  const std::size_t rows = reach_range.last - reach_range.first + 1;
  std::vector<CompatibilityReport> out(rows * cols);
  const auto cells = static_cast<std::int64_t>(out.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < cells; ++k) {
    const auto reach = reach_range.first + static_cast<std::uint32_t>(k / cols);
    const auto s = s_range.first + static_cast<std::uint32_t>(k % cols);
    const std::uint64_t n = std::uint64_t{1} << s;
    const auto p = task == TaskKind::star ? hypercube_star_potential(s, reach)
                                          : hypercube_ring_potential(s);
    out[k] = make_report({TopologyKind::hypercube, s, {}}, task, reach, n, p);
  }
  return out;
}

}  // namespace topo
