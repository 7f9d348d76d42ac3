#pragma once

#include <vector>

#include "netconn/network.hpp"

namespace netconn {

/// Sorts nodes and segment indices inside each partition and orders the
/// partitions by smallest node, so families compare with operator==.
std::vector<Partition> canonicalize(std::vector<Partition> parts);

/// Order-insensitive equality of the node sets only.
bool same_node_family(const std::vector<Partition>& x, const std::vector<Partition>& y);
/// Order-insensitive equality of node sets and segment sets.
bool same_family(const std::vector<Partition>& x, const std::vector<Partition>& y);

/// Checks that the node sets are non-empty, disjoint and cover 0..N-1.
/// When `check_segments` is set, also that segment sets are disjoint, cover
/// every position, and keep both endpoints inside their partition.
/// Throws InvariantError describing the first violation.
void validate_cover(const Network& net, const std::vector<Partition>& parts,
                    bool check_segments = true);

/// Node-to-partition lookup for a node cover over N dense indices.
std::vector<std::size_t> partition_labels(std::size_t node_count,
                                          const std::vector<Partition>& parts);

}  // namespace netconn
