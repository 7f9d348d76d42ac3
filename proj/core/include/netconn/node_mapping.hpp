#pragma once

#include <cstddef>
#include <vector>

#include "netconn/memory_estimate.hpp"
#include "netconn/network.hpp"
#include "netconn/start_rule.hpp"

namespace netconn {

/// Counters recorded by one node-mapping run.
struct NodeMappingTrace {
  /// Slots actually allocated for the flag arrays and the neighbour table.
  MemoryEstimate slots;
  std::size_t frontier_pushes = 0;
  std::size_t neighbor_inspections = 0;
  std::size_t expansions = 0;
};

/// Finds every connected partition by expanding neighbour lists outward from
/// a start node, first in first out. Two flag arrays of length N drive the
/// search: `removed` marks nodes whose neighbours were expanded, and
/// `in_partition` marks nodes already affiliated to the current partition.
/// A partition closes when a pass yields no new node; the search restarts
/// from an unremoved node until none remain.
///
/// Only node sets are filled; see assign_segments. Partitions come out in
/// start order, nodes in discovery order.
std::vector<Partition> find_partitions_node_mapping(const AdjacencyMap& adj,
                                                    StartRule start = {},
                                                    NodeMappingTrace* trace = nullptr);

/// Attaches each segment to the partition holding its endpoints.
/// Throws InvariantError when a segment straddles two partitions.
std::vector<Partition> assign_segments(const Network& net, std::vector<Partition> parts);

/// 2N Boolean slots plus N*c_av = 2M integer slots.
MemoryEstimate memory_estimate_node_mapping(std::size_t node_count, std::size_t segment_count);

}  // namespace netconn
