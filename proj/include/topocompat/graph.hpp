#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace topo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Neighbors are kept in CSR form, sorted ascending. Graphs up to
/// kBitRowLimit vertices also carry one adjacency bit row per vertex so
/// has_edge() is a single word test; larger graphs fall back to binary
/// search over the neighbor list.
class Graph {
 public:
  static constexpr std::size_t kBitRowLimit = 4096;

  /// Builds a graph from an unordered edge list. Duplicate and reversed
  /// pairs collapse. Throws InvalidVertex for endpoints >= order,
  /// InvalidEdge for self-loops and InvalidParameter for order 0.
  static Graph from_edge_list(std::size_t order, std::span<const Edge> edges);

  /// Builds a graph from per-vertex neighbor lists. Lists may be unsorted
  /// and contain duplicates but must be symmetric (InvalidEdge otherwise).
  static Graph from_neighbor_lists(std::vector<std::vector<Vertex>> lists);

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const;

  /// Adjacency row of v as a bitmask. Only meaningful for order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return bits_[v * row_words_]; }

  /// Each edge once with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> targets);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace topo
