#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topocompat/embedding.hpp"
#include "topocompat/graph.hpp"
#include "topocompat/topologies.hpp"

namespace topo {

enum class TaskKind { star, ring };

std::string_view to_string(TaskKind kind);
TaskKind parse_task_kind(std::string_view text);

/// Non-negative rational kept in lowest terms.
class Ratio {
 public:
  Ratio(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / den_; }

  /// Decimal rendering rounded half-up, e.g. 11/32 -> "0.3438".
  std::string rounded(int digits = 4) const;

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Inclusive integer interval [first, last].
struct IntRange {
  std::uint32_t first = 1;
  std::uint32_t last = 1;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct CompatibilityReport {
  TopologySpec system;
  TaskKind task = TaskKind::star;
  std::uint32_t reach = 1;
  std::uint64_t order_n = 1;
  std::uint64_t potential_p = 1;
  Ratio index{1, 1};
  std::string index_rounded;
};

/// Star potential of the hypercube H_s at reachability `reach`: the ball
/// size sum_{i=0}^{reach} C(s, i), exact. Terms with i > s vanish, so the
/// value saturates at 2^s. Requires 1 <= s <= 62 and reach >= 1.
std::uint64_t hypercube_star_potential(std::uint32_t s, std::uint32_t reach);

/// Largest star embeddable in graph_power(system, reach).
std::uint64_t star_potential(const Graph& system, std::uint32_t reach);

/// Longest cycle of graph_power(system, reach); 0 when it is acyclic or has
/// fewer than 3 vertices.
std::uint64_t ring_potential(const Graph& system, std::uint32_t reach,
                             const SearchBudget& budget = {});

/// As above, but hypercube systems with s >= 2 are answered by the Gray
/// code Hamiltonian cycle (always 2^s) without a generic search.
std::uint64_t ring_potential(const TopologySpec& system, std::uint32_t reach,
                             const SearchBudget& budget = {});

/// p / n. Throws InvalidPotential when p > n or n == 0.
Ratio compatibility_index(std::uint64_t p, std::uint64_t n);

/// Potential and index of one task kind on one system.
CompatibilityReport evaluate(const TopologySpec& system, TaskKind task,
                             std::uint32_t reach,
                             const SearchBudget& budget = {});

/// One report per (s, reach) on hypercube systems, reach-major then
/// s-ascending. Star cells use the closed form and ring cells the Gray
/// code witness; cells may be evaluated concurrently.
std::vector<CompatibilityReport> compatibility_table(IntRange s_range,
                                                     IntRange reach_range,
                                                     TaskKind task);

}  // namespace topo
