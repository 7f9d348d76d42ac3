#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "netconn/network.hpp"
#include "netconn/rational.hpp"

namespace netconn {

enum class NodeClass { boundary, bridge, bifurcation };

/// Class of a node with connectivity index `c` (c >= 1).
NodeClass classify_node(std::size_t c);
std::string_view to_string(NodeClass cls);

/// Topology of one connected partition.
///   open        - a tree, every pair joined by a unique path
///   closed      - cyclic with no bridge segment
///   semi-closed - cyclic with at least one bridge segment
enum class TopologyClass { open, closed, semi_closed };

std::string_view to_string(TopologyClass cls);

struct NetworkStats {
  std::size_t node_count = 0;
  std::size_t segment_count = 0;
  /// 2M/N, exact.
  Rational c_avg;
  std::size_t boundary = 0;
  std::size_t bridge = 0;
  std::size_t bifurcation = 0;
  /// Connectivity index -> node count.
  std::map<std::size_t, std::size_t> degree_histogram;
  std::size_t partition_count = 0;
  std::vector<TopologyClass> partition_classes;
};

/// Requires dense indices and a full partition cover with segments attached.
NetworkStats compute_stats(const Network& net, const std::vector<Partition>& parts);

/// Indices of the segments of `p` whose removal disconnects it, ascending.
/// Parallel copies of a segment are never bridges. Requires `p` connected.
std::vector<std::size_t> find_bridges(const Network& net, const Partition& p);

/// Throws PreconditionError when `p` is not connected.
TopologyClass classify_partition(const Network& net, const Partition& p);

}  // namespace netconn
