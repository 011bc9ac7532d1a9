#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "topocompat/graph.hpp"

namespace topo {

/// Caps for the exponential searches. Running out of nodes or time raises
/// BudgetExceeded; a host above max_host_order raises HostTooLarge.
struct SearchBudget {
  std::size_t max_host_order = 64;
  std::uint64_t max_nodes_expanded = 100'000'000;
  std::chrono::milliseconds wall_time_limit{60'000};

  /// Throws InvalidParameter unless every field is strictly positive.
  void validate() const;
};

/// mapping[t] is the host vertex that task vertex t is placed on.
struct Embedding {
  std::vector<Vertex> mapping;
};

/// Exact subgraph (monomorphism) search: an injective map of task
/// vertices onto host vertices such that every task edge lands on a host
/// edge. Returns nullopt only when the search proves no such map exists.
///
/// Task vertices are matched in a connectivity-first order seeded by
/// degree. Candidates are filtered by degree, by adjacency to the images
/// of already-matched neighbors, and by a free-neighbor lookahead. The
/// root candidates are split across OpenMP threads; the first certified
/// match wins.
std::optional<Embedding> find_embedding(const Graph& task, const Graph& host,
                                        const SearchBudget& budget = {});

bool verify_embedding(const Graph& task, const Graph& host,
                      const Embedding& e);

struct CycleSearchResult {
  std::size_t length = 0;  // 0 when the graph is acyclic
  std::optional<std::vector<Vertex>> witness;
};

/// Longest simple cycle by DFS over paths anchored at the smallest vertex
/// of each candidate cycle. Branches are cut when the vertices still
/// reachable from the path tip cannot beat the best cycle found, with a
/// two-colour bound on bipartite graphs.
CycleSearchResult longest_cycle(const Graph& g,
                                const SearchBudget& budget = {});

/// 1 + maximum degree: K_{1,k} embeds iff some vertex has degree >= k.
std::size_t max_star_order(const Graph& g);

/// { p in [3, up_to] : C_p embeds in g }, one exact-length cycle search per
/// p. Requires up_to <= order(g).
std::set<std::uint32_t> embeddable_ring_orders(const Graph& g,
                                               std::uint32_t up_to,
                                               const SearchBudget& budget = {});

namespace serial {

std::optional<Embedding> find_embedding(const Graph& task, const Graph& host,
                                        const SearchBudget& budget = {});
CycleSearchResult longest_cycle(const Graph& g,
                                const SearchBudget& budget = {});
std::set<std::uint32_t> embeddable_ring_orders(const Graph& g,
                                               std::uint32_t up_to,
                                               const SearchBudget& budget = {});

}  // namespace serial

}  // namespace topo
