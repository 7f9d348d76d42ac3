#pragma once

#include <cstddef>
#include <vector>

#include "netconn/network.hpp"

namespace netconn {

/// Reachability of every node from one origin.
struct ReachabilityRow {
  std::size_t origin = 0;
  std::vector<bool> reached;
};

/// Iterative depth-first reachability; kept apart from the partition
/// algorithms so the two share no traversal code.
ReachabilityRow reachability_row(const AdjacencyMap& adj, std::size_t origin);

/// True iff every node is reachable from `origin`. For a symmetric,
/// transitive relation one row decides total connectivity.
bool direct_inspection_connected(const AdjacencyMap& adj, std::size_t origin);

/// Default bound for triangular_pair_connected.
inline constexpr std::size_t kTriangularNodeLimit = 64;

/// Checks every pair (n, m), m > n, for mutual reachability. Quadratic;
/// throws SizeGuardError above `node_limit` nodes.
bool triangular_pair_connected(const AdjacencyMap& adj,
                               std::size_t node_limit = kTriangularNodeLimit);

/// Disjoint-set union over the segments, returned in canonical form with
/// segment sets attached. Requires dense indices.
std::vector<Partition> union_find_partitions(const Network& net);

/// Union by size with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when already joined.
  bool unite(std::size_t x, std::size_t y);
  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

}  // namespace netconn
