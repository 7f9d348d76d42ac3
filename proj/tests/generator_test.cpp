#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "netconn/error.hpp"
#include "netconn/generator.hpp"
#include "netconn/oracle.hpp"
#include "netconn/stats.hpp"
#include "support.hpp"

namespace netconn {
namespace {

std::string to_text(const Network& net) {
  std::ostringstream os;
  write_network(os, net);
  return os.str();
}

GeneratorConfig config(std::size_t nodes, Rational c, std::size_t partitions, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.nodes = nodes;
  cfg.c_target = c;
  cfg.partitions = partitions;
  cfg.seed = seed;
  return cfg;
}

TEST(PartitionSizes, EvenSplit) {
  EXPECT_EQ(partition_sizes(10, 3), (std::vector<std::size_t>{4, 3, 3}));
  EXPECT_EQ(partition_sizes(300, 3), (std::vector<std::size_t>{100, 100, 100}));
  EXPECT_THROW(partition_sizes(10, 0), FeasibilityError);
}

TEST(SegmentsFor, RoundsHalfUp) {
  EXPECT_EQ(segments_for(100, Rational(5)), 250u);
  EXPECT_EQ(segments_for(12, Rational(11, 6)), 11u);
  EXPECT_EQ(segments_for(3, Rational(5)), 8u);   // 7.5
  EXPECT_EQ(segments_for(3, Rational(13, 3)), 7u);  // 6.5 -> 7
  EXPECT_EQ(segments_for(7, Rational(5, 2)), 9u);   // 8.75
}

TEST(Generate, HundredNodesCavgFive) {
  const Network net = generate_network(config(100, Rational(5), 1, 42));
  EXPECT_EQ(net.node_count(), 100u);
  EXPECT_EQ(net.segment_count(), 250u);
  EXPECT_EQ(union_find_partitions(compact_indices(net).network).size(), 1u);
}

TEST(Generate, MinimalCavgGivesOpenTree) {
  const Network net = compact_indices(generate_network(config(12, Rational(11, 6), 1, 5))).network;
  EXPECT_EQ(net.segment_count(), 11u);
  const auto parts = union_find_partitions(net);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(classify_partition(net, parts[0]), TopologyClass::open);
}

TEST(Generate, ThreeEvenPartitions) {
  const Network net = compact_indices(generate_network(config(300, Rational(5), 3, 7))).network;
  const auto parts = union_find_partitions(net);
  ASSERT_EQ(parts.size(), 3u);
  for (const auto& p : parts) {
    EXPECT_EQ(p.nodes.size(), 100u);
    EXPECT_EQ(p.segment_indices.size(), 250u);
  }
}

TEST(Generate, NoSelfLoopsOrParallelsByDefault) {
  const Network net = generate_network(config(40, Rational(19), 2, 1));  // every pair in each partition
  std::vector<std::pair<NodeId, NodeId>> keys;
  for (const auto& s : net.segments()) {
    ASSERT_NE(s.a, s.b);
    keys.emplace_back(std::min(s.a, s.b), std::max(s.a, s.b));
  }
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(Generate, DeterministicPerSeed) {
  auto cfg = config(500, Rational(7, 2), 4, 99);
  cfg.scatter_indices = true;
  EXPECT_EQ(to_text(generate_network(cfg)), to_text(generate_network(cfg)));
  auto other = cfg;
  other.seed = 100;
  EXPECT_NE(to_text(generate_network(cfg)), to_text(generate_network(other)));
}

TEST(Generate, AchievedCavgWithinPOverN) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + rng() % 6;
    const std::size_t n = 2 * p + rng() % 150;
    const Rational c(8 + rng() % 25, 4);  // 2 .. 8
    auto cfg = config(n, c, p, rng());
    cfg.allow_parallel = true;
    const Network net = generate_network(cfg);
    ASSERT_EQ(net.node_count(), n);
    // |2M/N - c| <= P/N  <=>  |2M*den - num*N| <= P*den
    const auto lhs = static_cast<long long>(2 * net.segment_count() * c.den());
    const auto rhs = static_cast<long long>(c.num() * n);
    ASSERT_LE(static_cast<std::size_t>(std::llabs(lhs - rhs)), p * c.den());
    ASSERT_EQ(union_find_partitions(compact_indices(net).network).size(), p);
  }
}

TEST(Generate, ScatterKeepsStructure) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cfg = config(300, Rational(4), 3, seed);
    const Network plain = compact_indices(generate_network(cfg)).network;
    cfg.scatter_indices = true;
    const Network raw = generate_network(cfg);
    EXPECT_FALSE(raw.is_dense());
    const Network scattered = compact_indices(raw).network;

    auto degrees = [](const Network& net) {
      const auto adj = build_adjacency(net);
      std::vector<std::size_t> d;
      for (std::size_t v = 0; v < adj.node_count(); ++v) d.push_back(adj.degree(v));
      std::sort(d.begin(), d.end());
      return d;
    };
    auto sizes = [](const Network& net) {
      std::vector<std::size_t> s;
      for (const auto& p : union_find_partitions(net)) s.push_back(p.nodes.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    EXPECT_EQ(degrees(plain), degrees(scattered));
    EXPECT_EQ(sizes(plain), sizes(scattered));
    EXPECT_EQ(plain.segment_count(), scattered.segment_count());
  }
}

TEST(Generate, InfeasibleConfigsNameTheBound) {
  try {
    generate_network(config(100, Rational(1), 1, 0));
    FAIL();
  } catch (const FeasibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("too low"), std::string::npos);
  }
  try {
    generate_network(config(10, Rational(10), 1, 0));
    FAIL();
  } catch (const FeasibilityError& e) {
    EXPECT_NE(std::string(e.what()).find("simple-graph cap"), std::string::npos);
  }
  EXPECT_THROW(generate_network(config(5, Rational(2), 3, 0)), FeasibilityError);
  EXPECT_THROW(generate_network(config(5, Rational(2), 0, 0)), FeasibilityError);
}

TEST(Generate, ParallelSegmentsPastTheCap) {
  auto cfg = config(10, Rational(10), 1, 3);
  cfg.allow_parallel = true;
  const Network net = generate_network(cfg);
  EXPECT_EQ(net.segment_count(), 50u);  // 45 distinct pairs plus 5 parallels
  EXPECT_EQ(net.node_count(), 10u);
}

TEST(Generate, DenseRegimeFillsEveryPair) {
  // Exactly the simple-graph cap: the scan fallback must find the last pairs.
  const Network net = generate_network(config(30, Rational(29), 1, 8));
  EXPECT_EQ(net.segment_count(), 30u * 29u / 2u);
}

}  // namespace
}  // namespace netconn
