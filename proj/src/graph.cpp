#include "topocompat/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "topocompat/errors.hpp"

namespace topo {

namespace {

void check_order(std::size_t order) {
  if (order == 0) throw InvalidParameter("graph order must be positive");
  if (order > std::size_t{std::numeric_limits<Vertex>::max()})
    throw InvalidParameter("graph order " + std::to_string(order) +
                           " exceeds the vertex id range");
}

}  // namespace

Graph::Graph(std::vector<std::size_t> offsets, std::vector<Vertex> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets)) {
  const std::size_t n = order();
  if (n <= kBitRowLimit) {
    row_words_ = (n + 63) / 64;
    bits_.assign(n * row_words_, 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : neighbors(u))
        bits_[u * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

Graph Graph::from_edge_list(std::size_t order, std::span<const Edge> edges) {
  check_order(order);
  std::vector<std::vector<Vertex>> lists(order);
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order)
      throw InvalidVertex("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") has an endpoint outside 0.." +
                          std::to_string(order - 1));
    if (u == v)
      throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  return from_neighbor_lists(std::move(lists));
}

Graph Graph::from_neighbor_lists(std::vector<std::vector<Vertex>> lists) {
  const std::size_t n = lists.size();
  check_order(n);
  std::vector<std::size_t> offsets(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    auto& l = lists[u];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (!l.empty() && l.back() >= n)
      throw InvalidVertex("neighbor " + std::to_string(l.back()) +
                          " of vertex " + std::to_string(u) + " out of range");
    if (std::binary_search(l.begin(), l.end(), u))
      throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    offsets[u + 1] = offsets[u] + l.size();
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : lists[u])
      if (!std::binary_search(lists[v].begin(), lists[v].end(), u))
        throw InvalidEdge("neighbor lists are not symmetric at (" +
                          std::to_string(u) + "," + std::to_string(v) + ")");

  std::vector<Vertex> targets;
  targets.reserve(offsets[n]);
  for (auto& l : lists) {
    targets.insert(targets.end(), l.begin(), l.end());
    std::vector<Vertex>().swap(l);
  }
  return Graph(std::move(offsets), std::move(targets));
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  if (!bits_.empty())
    return (bits_[u * row_words_ + v / 64] >> (v % 64)) & 1;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace topo
