#include "topocompat/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>

#include "topocompat/distance.hpp"
#include "topocompat/errors.hpp"

namespace topo {

namespace {

using Clock = std::chrono::steady_clock;
using Words = std::vector<std::uint64_t>;

// Node and wall-time accounting shared by all workers of one search.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& b)
      : max_nodes_(b.max_nodes_expanded),
        batch_(std::clamp<std::uint64_t>(b.max_nodes_expanded / 64, 1, 1024)),
        deadline_(Clock::now() + b.wall_time_limit) {}

  std::uint64_t batch() const { return batch_; }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

  bool flush(std::uint64_t& pending) {
    const auto total =
        nodes_.fetch_add(pending, std::memory_order_relaxed) + pending;
    pending = 0;
    if (total > max_nodes_ || Clock::now() > deadline_)
      exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted();
  }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t batch_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

// Per-worker counter; batches updates to the shared tracker.
class NodeCounter {
 public:
  explicit NodeCounter(BudgetTracker& t) : tracker_(t) {}
  ~NodeCounter() { tracker_.flush(pending_); }
  NodeCounter(const NodeCounter&) = delete;
  NodeCounter& operator=(const NodeCounter&) = delete;

  bool tick() {
    if (++pending_ >= tracker_.batch()) return tracker_.flush(pending_);
    return !tracker_.exhausted();
  }

 private:
  BudgetTracker& tracker_;
  std::uint64_t pending_ = 0;
};

// One adjacency bit row per vertex.
class BitRows {
 public:
  explicit BitRows(const Graph& g)
      : words_((g.order() + 63) / 64), bits_(g.order() * words_, 0) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v : g.neighbors(u)) set(bits_.data() + u * words_, v);
  }

  std::size_t words() const { return words_; }
  const std::uint64_t* row(Vertex v) const {
    return bits_.data() + v * words_;
  }
  bool test(Vertex u, Vertex v) const { return get(row(u), v); }

  static void set(std::uint64_t* w, Vertex v) {
    w[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  static void reset(std::uint64_t* w, Vertex v) {
    w[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  static bool get(const std::uint64_t* w, Vertex v) {
    return (w[v / 64] >> (v % 64)) & 1;
  }

 private:
  std::size_t words_;
  Words bits_;
};

// Runs body(i, state) for i in [0, count). With `parallel` the indices are
// handed out dynamically to OpenMP threads, each owning one state.
template <class MakeState, class Body>
void for_each_root(bool parallel, std::size_t count, MakeState make_state,
                   Body body) {
  if (!parallel) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(i, state);
    return;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    auto state = make_state();
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
      body(static_cast<std::size_t>(i), state);
  }
}

void check_host(const Graph& host, const SearchBudget& budget) {
  budget.validate();
  if (host.order() > budget.max_host_order)
    throw HostTooLarge("host order " + std::to_string(host.order()) +
                       " exceeds max_host_order " +
                       std::to_string(budget.max_host_order));
}

[[noreturn]] void throw_exhausted(const char* what) {
  throw BudgetExceeded(std::string(what) +
                       ": node or time budget exhausted, result unknown");
}

// ---------------------------------------------------------------------------
// Subgraph matching

class SubgraphMatcher {
 public:
  struct State {
    std::vector<Vertex> image;  // host vertex per matching position
    Words used;
    Words candidates;  // one bit row per depth
  };

  SubgraphMatcher(const Graph& task, const Graph& host)
      : task_order_(task.order()), host_(host), words_(host_.words()) {
    if (prefilter_rejects(task, host)) {
      impossible_ = true;
      return;
    }
    build_order(task);
    base_.assign(task_order_ * words_, 0);
    for (std::size_t k = 0; k < task_order_; ++k) {
      const auto need = task.degree(order_[k]);
      for (Vertex h = 0; h < host.order(); ++h)
        if (host.degree(h) >= need) BitRows::set(base_.data() + k * words_, h);
    }
  }

  bool impossible() const { return impossible_; }

  std::vector<Vertex> roots() const {
    std::vector<Vertex> out;
    for (Vertex h = 0; h < words_ * 64; ++h)
      if (BitRows::get(base_.data(), h)) out.push_back(h);
    return out;
  }

  State make_state() const {
    return State{std::vector<Vertex>(task_order_, 0), Words(words_, 0),
                 Words(task_order_ * words_, 0)};
  }

  bool search_root(Vertex root, State& st, NodeCounter& counter,
                   const std::atomic<bool>& stop) const {
    std::fill(st.used.begin(), st.used.end(), 0);
    if (!counter.tick()) return false;
    if (free_neighbors(root, st) < future_[0]) return false;
    BitRows::set(st.used.data(), root);
    st.image[0] = root;
    return extend(1, st, counter, stop);
  }

  Embedding extract(const State& st) const {
    Embedding e;
    e.mapping.resize(task_order_);
    for (std::size_t k = 0; k < task_order_; ++k)
      e.mapping[order_[k]] = st.image[k];
    return e;
  }

 private:
  static bool prefilter_rejects(const Graph& task, const Graph& host) {
    if (task.order() > host.order()) return true;
    if (task.edge_count() > host.edge_count()) return true;
    // The i-th largest task degree must not exceed the i-th largest host
    // degree.
    std::vector<std::size_t> td, hd;
    for (Vertex v = 0; v < task.order(); ++v) td.push_back(task.degree(v));
    for (Vertex v = 0; v < host.order(); ++v) hd.push_back(host.degree(v));
    std::sort(td.rbegin(), td.rend());
    std::sort(hd.rbegin(), hd.rend());
    for (std::size_t i = 0; i < td.size(); ++i)
      if (td[i] > hd[i]) return true;
    return false;
  }

  // Greedy order: next task vertex is the one with the most already
  // ordered neighbors, ties broken by larger degree, then smaller id.
  void build_order(const Graph& task) {
    std::vector<std::size_t> position(task_order_, task_order_);
    std::vector<std::size_t> links(task_order_, 0);
    for (std::size_t k = 0; k < task_order_; ++k) {
      Vertex pick = 0;
      bool have = false;
      for (Vertex v = 0; v < task_order_; ++v) {
        if (position[v] != task_order_) continue;
        if (!have || links[v] > links[pick] ||
            (links[v] == links[pick] && task.degree(v) > task.degree(pick))) {
          pick = v;
          have = true;
        }
      }
      position[pick] = k;
      order_.push_back(pick);
      std::vector<std::size_t> back;
      for (Vertex u : task.neighbors(pick)) {
        if (position[u] < k) back.push_back(position[u]);
        ++links[u];
      }
      future_.push_back(task.degree(pick) - back.size());
      back_.push_back(std::move(back));
    }
  }

  std::size_t free_neighbors(Vertex h, const State& st) const {
    const auto* row = host_.row(h);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w)
      c += std::popcount(row[w] & ~st.used[w]);
    return c;
  }

  bool extend(std::size_t depth, State& st, NodeCounter& counter,
              const std::atomic<bool>& stop) const {
    if (depth == task_order_) return true;
    std::uint64_t* cand = st.candidates.data() + depth * words_;
    const std::uint64_t* base = base_.data() + depth * words_;
    for (std::size_t w = 0; w < words_; ++w) cand[w] = base[w] & ~st.used[w];
    for (std::size_t pos : back_[depth]) {
      const auto* row = host_.row(st.image[pos]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] &= row[w];
    }

    for (std::size_t w = 0; w < words_; ++w) {
      while (cand[w] != 0) {
        const auto h = static_cast<Vertex>(w * 64 + std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        if (stop.load(std::memory_order_relaxed) || !counter.tick())
          return false;
        if (free_neighbors(h, st) < future_[depth]) continue;
        BitRows::set(st.used.data(), h);
        st.image[depth] = h;
        if (extend(depth + 1, st, counter, stop)) return true;
        BitRows::reset(st.used.data(), h);
      }
    }
    return false;
  }

  std::size_t task_order_;
  BitRows host_;
  std::size_t words_;
  bool impossible_ = false;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> back_;  // earlier-position neighbors
  std::vector<std::size_t> future_;             // later-position neighbors
  Words base_;                                  // degree-feasible hosts
};

std::optional<Embedding> find_embedding_impl(const Graph& task,
                                             const Graph& host,
                                             const SearchBudget& budget,
                                             bool parallel) {
  check_host(host, budget);
  SubgraphMatcher matcher(task, host);
  if (matcher.impossible()) return std::nullopt;

  const auto roots = matcher.roots();
  BudgetTracker tracker(budget);
  std::atomic<bool> found{false};
  std::optional<Embedding> result;
  std::mutex mu;

  for_each_root(
      parallel, roots.size(), [&] { return matcher.make_state(); },
      [&](std::size_t i, SubgraphMatcher::State& st) {
        if (found.load(std::memory_order_relaxed) || tracker.exhausted())
          return;
        NodeCounter counter(tracker);
        if (matcher.search_root(roots[i], st, counter, found)) {
          std::lock_guard lock(mu);
          if (!result) result = matcher.extract(st);
          found.store(true);
        }
      });

  if (result) return result;
  if (tracker.exhausted()) throw_exhausted("find_embedding");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cycle searches

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  std::vector<std::uint8_t> color(g.order(), 2);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (color[v] == 2) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// Cycles are enumerated as paths start = path[0] < every other path
// vertex, closed by an edge back to start.
class CycleSearch {
 public:
  struct State {
    std::vector<Vertex> path;
    Words visited;
    Words above;  // vertices > start
    Words reach;
    Words frontier;
    Words next;
  };

  struct Best {
    std::atomic<std::size_t> length{0};
    std::mutex mu;
    std::vector<Vertex> cycle;

    void offer(const std::vector<Vertex>& path) {
      if (path.size() <= length.load(std::memory_order_relaxed)) return;
      std::lock_guard lock(mu);
      if (path.size() > length.load()) {
        cycle = path;
        length.store(path.size());
      }
    }
  };

  explicit CycleSearch(const Graph& g)
      : g_(g), adj_(g), words_(adj_.words()), n_(g.order()) {
    if (auto coloring = two_coloring(g)) {
      bipartite_ = true;
      color1_.assign(words_, 0);
      for (Vertex v = 0; v < n_; ++v)
        if ((*coloring)[v] == 1) BitRows::set(color1_.data(), v);
    }
  }

  std::size_t order() const { return n_; }

  State make_state() const {
    return State{{}, Words(words_), Words(words_), Words(words_),
                 Words(words_), Words(words_)};
  }

  void longest_from(Vertex start, State& st, NodeCounter& counter,
                    Best& best) const {
    reset(start, st);
    longest_dfs(start, st, counter, best);
  }

  bool exact_from(Vertex start, std::size_t length, const DistanceMatrix& dist,
                  State& st, NodeCounter& counter,
                  const std::atomic<bool>& stop) const {
    if (n_ - start < length) return false;
    reset(start, st);
    return exact_dfs(start, length, dist, st, counter, stop);
  }

 private:
  void reset(Vertex start, State& st) const {
    std::fill(st.visited.begin(), st.visited.end(), 0);
    std::fill(st.above.begin(), st.above.end(), 0);
    for (Vertex v = start + 1; v < n_; ++v) BitRows::set(st.above.data(), v);
    st.path.assign(1, start);
    BitRows::set(st.visited.data(), start);
  }

  // Upper bound on the length of any cycle extending the current path.
  // Returns 0 when no extension can close back to start.
  std::size_t extension_bound(Vertex start, State& st) const {
    const Vertex tip = st.path.back();
    const auto* tip_row = adj_.row(tip);
    bool any = false;
    for (std::size_t w = 0; w < words_; ++w) {
      st.reach[w] = 0;
      st.frontier[w] = tip_row[w] & st.above[w] & ~st.visited[w];
      any |= st.frontier[w] != 0;
    }
    while (any) {
      std::fill(st.next.begin(), st.next.end(), 0);
      for (std::size_t w = 0; w < words_; ++w) {
        st.reach[w] |= st.frontier[w];
        for (auto bits = st.frontier[w]; bits != 0; bits &= bits - 1) {
          const auto* row =
              adj_.row(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
          for (std::size_t x = 0; x < words_; ++x) st.next[x] |= row[x];
        }
      }
      any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        st.frontier[w] =
            st.next[w] & st.above[w] & ~st.visited[w] & ~st.reach[w];
        any |= st.frontier[w] != 0;
      }
    }

    const auto* start_row = adj_.row(start);
    bool closable = false;
    std::size_t total = 0, ones = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      closable |= (st.reach[w] & start_row[w]) != 0;
      const auto span = st.reach[w] | st.visited[w];
      total += std::popcount(span);
      if (bipartite_) ones += std::popcount(span & color1_[w]);
    }
    if (!closable) return 0;
    if (bipartite_) return 2 * std::min(ones, total - ones);
    return total;
  }

  // Returns false when the whole search should stop.
  bool longest_dfs(Vertex start, State& st, NodeCounter& counter,
                   Best& best) const {
    if (!counter.tick()) return false;
    const Vertex tip = st.path.back();
    if (st.path.size() >= 3 && adj_.test(tip, start)) best.offer(st.path);
    if (best.length.load(std::memory_order_relaxed) >= n_) return false;
    if (extension_bound(start, st) <= best.length.load()) return true;

    for (Vertex nb : g_.neighbors(tip)) {
      if (nb <= start || BitRows::get(st.visited.data(), nb)) continue;
      st.path.push_back(nb);
      BitRows::set(st.visited.data(), nb);
      const bool go_on = longest_dfs(start, st, counter, best);
      BitRows::reset(st.visited.data(), nb);
      st.path.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool exact_dfs(Vertex start, std::size_t length, const DistanceMatrix& dist,
                 State& st, NodeCounter& counter,
                 const std::atomic<bool>& stop) const {
    if (stop.load(std::memory_order_relaxed) || !counter.tick()) return false;
    const Vertex tip = st.path.back();
    const std::size_t len = st.path.size();
    if (len == length) return adj_.test(tip, start);

    // After appending nb the path has len + 1 vertices and needs
    // length - len more edges to return to start.
    const std::size_t closing = length - len;
    for (Vertex nb : g_.neighbors(tip)) {
      if (nb <= start || BitRows::get(st.visited.data(), nb)) continue;
      const auto d = dist.at(nb, start);
      if (!d || *d > closing) continue;
      if (bipartite_ && ((closing - *d) & 1) != 0) continue;
      st.path.push_back(nb);
      BitRows::set(st.visited.data(), nb);
      const bool hit = exact_dfs(start, length, dist, st, counter, stop);
      BitRows::reset(st.visited.data(), nb);
      st.path.pop_back();
      if (hit) return true;
    }
    return false;
  }

  const Graph& g_;
  BitRows adj_;
  std::size_t words_;
  std::size_t n_;
  bool bipartite_ = false;
  Words color1_;
};

CycleSearchResult longest_cycle_impl(const Graph& g, const SearchBudget& budget,
                                     bool parallel) {
  check_host(g, budget);
  CycleSearch search(g);
  BudgetTracker tracker(budget);
  CycleSearch::Best best;
  const std::size_t n = g.order();

  for_each_root(
      parallel, n, [&] { return search.make_state(); },
      [&](std::size_t start, CycleSearch::State& st) {
        // Only vertices >= start can lie on a cycle anchored at start.
        if (n - start <= best.length.load() || tracker.exhausted()) return;
        NodeCounter counter(tracker);
        search.longest_from(static_cast<Vertex>(start), st, counter, best);
      });

  if (tracker.exhausted() && best.length.load() < n)
    throw_exhausted("longest_cycle");
  CycleSearchResult result;
  if (best.length.load() >= 3) {
    result.length = best.length.load();
    result.witness = best.cycle;
  }
  return result;
}

std::set<std::uint32_t> ring_orders_impl(const Graph& g, std::uint32_t up_to,
                                         const SearchBudget& budget,
                                         bool parallel) {
  check_host(g, budget);
  if (up_to > g.order())
    throw InvalidParameter("up_to " + std::to_string(up_to) +
                           " exceeds graph order " +
                           std::to_string(g.order()));
  CycleSearch search(g);
  const auto dist = parallel ? all_pairs_distances(g)
                             : serial::all_pairs_distances(g);
  BudgetTracker tracker(budget);
  std::set<std::uint32_t> orders;

  for (std::uint32_t p = 3; p <= up_to; ++p) {
    std::atomic<bool> found{false};
    for_each_root(
        parallel, g.order(), [&] { return search.make_state(); },
        [&](std::size_t start, CycleSearch::State& st) {
          if (found.load(std::memory_order_relaxed) || tracker.exhausted())
            return;
          NodeCounter counter(tracker);
          if (search.exact_from(static_cast<Vertex>(start), p, dist, st,
                                counter, found))
            found.store(true);
        });
    if (found.load()) {
      orders.insert(p);
    } else if (tracker.exhausted()) {
      throw_exhausted("embeddable_ring_orders");
    }
  }
  return orders;
}

}  // namespace

void SearchBudget::validate() const {
  if (max_host_order == 0 || max_nodes_expanded == 0 ||
      wall_time_limit.count() <= 0)
    throw InvalidParameter("search budget fields must be strictly positive");
}

std::optional<Embedding> find_embedding(const Graph& task, const Graph& host,
                                        const SearchBudget& budget) {
  return find_embedding_impl(task, host, budget, true);
}

bool verify_embedding(const Graph& task, const Graph& host,
                      const Embedding& e) {
  if (e.mapping.size() != task.order()) return false;
  std::vector<bool> taken(host.order(), false);
  for (Vertex h : e.mapping) {
    if (h >= host.order() || taken[h]) return false;
    taken[h] = true;
  }
  for (const auto& [u, v] : task.edges())
    if (!host.has_edge(e.mapping[u], e.mapping[v])) return false;
  return true;
}

CycleSearchResult longest_cycle(const Graph& g, const SearchBudget& budget) {
  return longest_cycle_impl(g, budget, true);
}

std::size_t max_star_order(const Graph& g) { return 1 + g.max_degree(); }

std::set<std::uint32_t> embeddable_ring_orders(const Graph& g,
                                               std::uint32_t up_to,
                                               const SearchBudget& budget) {
  return ring_orders_impl(g, up_to, budget, true);
}

namespace serial {

std::optional<Embedding> find_embedding(const Graph& task, const Graph& host,
                                        const SearchBudget& budget) {
  return find_embedding_impl(task, host, budget, false);
}

CycleSearchResult longest_cycle(const Graph& g, const SearchBudget& budget) {
  return longest_cycle_impl(g, budget, false);
}

std::set<std::uint32_t> embeddable_ring_orders(const Graph& g,
                                               std::uint32_t up_to,
                                               const SearchBudget& budget) {
  return ring_orders_impl(g, up_to, budget, false);
}

}  // namespace serial

}  // namespace topo
