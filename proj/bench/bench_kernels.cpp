// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "topocompat/distance.hpp"
#include "topocompat/embedding.hpp"
#include "topocompat/topologies.hpp"

namespace {

using namespace topo;

void BM_AllPairs(benchmark::State& state) {
  const auto g = hypercube(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_AllPairsSerial(benchmark::State& state) {
  const auto g = hypercube(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::all_pairs_distances(g));
}

void BM_GraphPower(benchmark::State& state) {
  const auto g = hypercube(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_power(g, 3));
}

void BM_GraphPowerSerial(benchmark::State& state) {
  const auto g = hypercube(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::graph_power(g, 3));
}

// An odd ring in a bipartite host: absence is only proven by exhausting
// the tree, so root splitting matters.
void BM_FindEmbeddingAbsent(benchmark::State& state) {
  const auto host = hypercube(4);
  const auto task = ring(15);
  for (auto _ : state) benchmark::DoNotOptimize(find_embedding(task, host));
}

void BM_FindEmbeddingAbsentSerial(benchmark::State& state) {
  const auto host = hypercube(4);
  const auto task = ring(15);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::find_embedding(task, host));
}

void BM_LongestCycle(benchmark::State& state) {
  const auto g = graph_power(ring(static_cast<std::uint32_t>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(longest_cycle(g));
}

void BM_LongestCycleSerial(benchmark::State& state) {
  const auto g = graph_power(ring(static_cast<std::uint32_t>(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(serial::longest_cycle(g));
}

void BM_RingOrders(benchmark::State& state) {
  const auto g = hypercube(4);
  for (auto _ : state) benchmark::DoNotOptimize(embeddable_ring_orders(g, 16));
}

void BM_RingOrdersSerial(benchmark::State& state) {
  const auto g = hypercube(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::embeddable_ring_orders(g, 16));
}

}  // namespace

BENCHMARK(BM_AllPairs)->Arg(8)->Arg(10);
BENCHMARK(BM_AllPairsSerial)->Arg(8)->Arg(10);
BENCHMARK(BM_GraphPower)->Arg(10)->Arg(14);
BENCHMARK(BM_GraphPowerSerial)->Arg(10)->Arg(14);
BENCHMARK(BM_FindEmbeddingAbsent);
BENCHMARK(BM_FindEmbeddingAbsentSerial);
BENCHMARK(BM_LongestCycle)->Arg(32)->Arg(64);
BENCHMARK(BM_LongestCycleSerial)->Arg(32)->Arg(64);
BENCHMARK(BM_RingOrders);
BENCHMARK(BM_RingOrdersSerial);

BENCHMARK_MAIN();
