#include <benchmark/benchmark.h>

#include <map>

#include "netconn/generator.hpp"
#include "netconn/node_mapping.hpp"
#include "netconn/segment_mapping.hpp"

namespace {

using netconn::Network;

// Generated networks are cached per (N, P) so setup stays out of the timings.
const Network& network_for(std::size_t nodes, std::size_t partitions, bool scatter = false) {
  static std::map<std::tuple<std::size_t, std::size_t, bool>, Network> cache;
  const auto key = std::make_tuple(nodes, partitions, scatter);
  auto it = cache.find(key);
  if (it == cache.end()) {
    netconn::GeneratorConfig cfg;
    cfg.nodes = nodes;
    cfg.c_target = netconn::Rational(5);
    cfg.partitions = partitions;
    cfg.seed = 7;
    cfg.scatter_indices = scatter;
    auto raw = netconn::generate_network(cfg);
    it = cache.emplace(key, scatter ? std::move(raw) : netconn::compact_indices(raw).network).first;
  }
  return it->second;
}

void BM_NodeMapping(benchmark::State& state) {
  const auto& net = network_for(state.range(0), state.range(1));
  const auto adj = netconn::build_adjacency(net);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netconn::find_partitions_node_mapping(adj));
  }
  state.SetComplexityN(state.range(0));
}

void BM_SegmentMapping(benchmark::State& state) {
  const auto& net = network_for(state.range(0), state.range(1));
  const auto variant = state.range(2) ? netconn::RemovalVariant::lazy : netconn::RemovalVariant::direct;
  for (auto _ : state) {
    benchmark::DoNotOptimize(netconn::find_partitions_segment_mapping(net, variant));
  }
  state.SetComplexityN(state.range(0));
}

void BM_BuildAdjacency(benchmark::State& state) {
  const auto& net = network_for(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netconn::build_adjacency(net));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Compact(benchmark::State& state) {
  const auto& net = network_for(state.range(0), 1, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(netconn::compact_indices(net));
  }
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_NodeMapping)
    ->ArgsProduct({benchmark::CreateRange(1 << 12, 1 << 18, 4), {1}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK(BM_SegmentMapping)
    ->ArgsProduct({benchmark::CreateRange(1 << 12, 1 << 18, 4), {1}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
// Partitioned inputs: segment mapping pays one sweep chain per partition.
BENCHMARK(BM_NodeMapping)->ArgsProduct({{1 << 16}, {1, 8, 64}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SegmentMapping)->ArgsProduct({{1 << 16}, {1, 8, 64}, {0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildAdjacency)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 18)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);
BENCHMARK(BM_Compact)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 18)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
