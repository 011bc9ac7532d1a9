#include "topocompat/distance.hpp"

#include <algorithm>
#include <string>

#include "topocompat/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topo {

namespace {

// BFS from source writing hop counts into dist (size order, pre-filled
// with kUnreachable). Stops expanding past max_depth. Returns the number
// of vertices reached, source included.
std::size_t bfs(const Graph& g, Vertex source, std::uint32_t max_depth,
                std::uint32_t* dist, std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const std::uint32_t next = dist[u] + 1;
    if (next > max_depth) continue;
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] != DistanceMatrix::kUnreachable) continue;
      dist[v] = next;
      queue.push_back(v);
    }
  }
  return queue.size();
}

void fill_row(const Graph& g, DistanceMatrix& m, Vertex u,
              std::vector<Vertex>& queue) {
  std::uint32_t* row = m.row(u);
  bfs(g, u, DistanceMatrix::kUnreachable - 1, row, queue);
}

// Vertices within reach of u, excluding u itself, via a truncated BFS.
// `dist` is scratch of size order, all kUnreachable on entry and exit.
std::vector<Vertex> ball_neighbors(const Graph& g, Vertex u,
                                   std::uint32_t reach,
                                   std::vector<std::uint32_t>& dist,
                                   std::vector<Vertex>& queue) {
  bfs(g, u, reach, dist.data(), queue);
  std::vector<Vertex> out(queue.begin() + 1, queue.end());
  for (Vertex v : queue) dist[v] = DistanceMatrix::kUnreachable;
  return out;
}

void check_reach(std::uint32_t reach) {
  if (reach == 0)
    throw InvalidReachability("reachability must be at least 1");
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t order)
    : order_(order), cells_(order * order, kUnreachable) {}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  DistanceMatrix m(g.order());
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(g.order());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u)
      fill_row(g, m, static_cast<Vertex>(u), queue);
  }
  return m;
}

Distance diameter(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::uint32_t best = 0;
  for (Vertex u = 0; u < n; ++u) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    if (bfs(g, u, DistanceMatrix::kUnreachable - 1, dist.data(), queue) != n)
      return std::nullopt;
    best = std::max(best, dist[queue.back()]);
  }
  return best;
}

Graph graph_power(const Graph& g, std::uint32_t reach) {
  check_reach(reach);
  if (reach == 1) return g;
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<Vertex>> lists(g.order());
#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(g.order(), DistanceMatrix::kUnreachable);
    std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t u = 0; u < n; ++u)
      lists[u] = ball_neighbors(g, static_cast<Vertex>(u), reach, dist, queue);
  }
  return Graph::from_neighbor_lists(std::move(lists));
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t ball_size(const Graph& g, Vertex center, std::uint32_t reach) {
  if (center >= g.order())
    throw InvalidVertex("center " + std::to_string(center) + " out of range");
  std::vector<std::uint32_t> dist(g.order(), DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue;
  return bfs(g, center, reach, dist.data(), queue);
}

namespace serial {

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < g.order(); ++u) fill_row(g, m, u, queue);
  return m;
}

Graph graph_power(const Graph& g, std::uint32_t reach) {
  check_reach(reach);
  std::vector<std::vector<Vertex>> lists(g.order());
  std::vector<std::uint32_t> dist(g.order(), DistanceMatrix::kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < g.order(); ++u)
    lists[u] = ball_neighbors(g, u, reach, dist, queue);
  return Graph::from_neighbor_lists(std::move(lists));
}

}  // namespace serial

}  // namespace topo
