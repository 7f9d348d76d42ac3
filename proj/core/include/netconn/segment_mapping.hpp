#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "netconn/memory_estimate.hpp"
#include "netconn/network.hpp"
#include "netconn/start_rule.hpp"

namespace netconn {

/// How consumed segments leave the working list.
enum class RemovalVariant {
  direct,  // physically dropped; the list is compacted in place every sweep
  lazy,    // marked in an M-length flag array and skipped
};

std::string_view to_string(RemovalVariant v);

struct SegmentMappingTrace {
  MemoryEstimate slots;
  /// Sweeps over the working list, one entry per partition.
  std::vector<std::size_t> sweeps_per_partition;
  /// Segment inspections across all sweeps, consumed or not.
  std::size_t segment_inspections = 0;
  /// Partitions closed by a sweep that added no node while unconsumed
  /// segments remained. Zero for a totally connected network.
  std::size_t stalled_partitions = 0;
};

/// Finds every connected partition by seeding a connected-node set with both
/// ends of a seed segment and sweeping the remaining segments in stored
/// order. A segment with at least one connected end is consumed and its
/// other end joins the set; sweeps repeat until one adds nothing or the list
/// runs out. The next partition starts from a fresh seed segment.
///
/// Both node and segment sets are filled; nodes in discovery order, segments
/// in consumption order. Requires dense indices. Both removal variants give
/// identical output for the same seed rule.
std::vector<Partition> find_partitions_segment_mapping(const Network& net,
                                                       RemovalVariant variant = RemovalVariant::direct,
                                                       StartRule seed = {},
                                                       SegmentMappingTrace* trace = nullptr);

/// direct: N Boolean + 2M integer slots; lazy adds M Boolean slots.
MemoryEstimate memory_estimate_segment_mapping(std::size_t node_count, std::size_t segment_count,
                                               RemovalVariant variant);

}  // namespace netconn
