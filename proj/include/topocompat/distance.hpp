#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "topocompat/graph.hpp"

namespace topo {

/// Hop count between two vertices; nullopt means unreachable (or, for
/// diameter(), an infinite diameter of a disconnected graph).
using Distance = std::optional<std::uint32_t>;

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t order);

  std::size_t order() const { return order_; }
  Distance at(Vertex u, Vertex v) const {
    const auto d = cells_[u * order_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }

  /// Mutable row for kernels filling the matrix; kUnreachable is the
  /// storage marker and never leaves this class through at().
  std::uint32_t* row(Vertex u) { return cells_.data() + u * order_; }

  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> cells_;
};

/// BFS from every vertex, sources spread over OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Max finite distance; nullopt when g is disconnected.
Distance diameter(const Graph& g);

/// u,v adjacent iff 1 <= dist(u,v) <= reach. Throws InvalidReachability
/// for reach == 0.
Graph graph_power(const Graph& g, std::uint32_t reach);

bool is_bipartite(const Graph& g);

/// |{u : dist(center,u) <= reach}|, center included.
std::size_t ball_size(const Graph& g, Vertex center, std::uint32_t reach);

namespace serial {

// Single-threaded reference kernels. Kept for tests and the benchmark.
DistanceMatrix all_pairs_distances(const Graph& g);
Graph graph_power(const Graph& g, std::uint32_t reach);

}  // namespace serial

}  // namespace topo
