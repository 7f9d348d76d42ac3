#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netconn {

/// Node index as it appears in input files. Indices may be sparse.
using NodeId = std::uint64_t;

/// Undirected segment joining two distinct nodes.
struct Segment {
  NodeId a = 0;
  NodeId b = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Ordered segment list. Nodes exist only as segment endpoints, so a
/// network can never hold a node with connectivity index zero.
class Network {
 public:
  /// Throws EmptyNetworkError for no segments and FormatError for a self-loop.
  explicit Network(std::vector<Segment> segments);

  std::span<const Segment> segments() const noexcept { return segments_; }
  const Segment& segment(std::size_t i) const { return segments_[i]; }

  /// N: number of distinct endpoint indices.
  std::size_t node_count() const noexcept { return node_count_; }
  /// M: number of segments, parallels counted separately.
  std::size_t segment_count() const noexcept { return segments_.size(); }
  NodeId max_node_id() const noexcept { return max_id_; }

  /// True when the node indices are exactly 0..N-1.
  bool is_dense() const noexcept { return max_id_ + 1 == node_count_; }

  friend bool operator==(const Network& x, const Network& y) {
    return x.segments_ == y.segments_;
  }

 private:
  std::vector<Segment> segments_;
  std::size_t node_count_ = 0;
  NodeId max_id_ = 0;
};

/// Bijection between dense compact indices and original node ids.
class IndexMapping {
 public:
  IndexMapping() = default;
  /// `original_of[k]` is the original id of compact index k; ids must be distinct.
  explicit IndexMapping(std::vector<NodeId> original_of);

  std::size_t size() const noexcept { return original_of_.size(); }
  std::span<const NodeId> original_of() const noexcept { return original_of_; }

  /// Throws MappingError when out of domain.
  NodeId original(std::size_t compact) const;
  std::size_t compact(NodeId original) const;

  bool is_identity() const noexcept;

 private:
  std::vector<NodeId> original_of_;
  std::unordered_map<NodeId, std::size_t> compact_of_;
};

/// Node-to-neighbours table over compact indices, stored as offsets into a
/// single neighbour array. A node's entries follow segment order; a parallel
/// segment contributes one entry per copy.
class AdjacencyMap {
 public:
  AdjacencyMap(std::vector<std::size_t> offsets, std::vector<std::size_t> targets);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::span<const std::size_t> neighbors(std::size_t node) const {
    return {targets_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
  }
  /// Connectivity index c of `node`.
  std::size_t degree(std::size_t node) const {
    return offsets_[node + 1] - offsets_[node];
  }
  /// Total neighbour entries; equals 2M.
  std::size_t entry_count() const noexcept { return targets_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> targets_;
};

/// One totally connected component. Indices are compact; `segment_indices`
/// are positions in Network::segments().
struct Partition {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> segment_indices;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct ParsedNetwork {
  Network network;
  /// 1-based source line of each segment.
  std::vector<std::size_t> lines;
};

/// Parses the edge-list format: one "u v" pair per line, '#' comments and
/// blank lines ignored.
Network parse_network(std::string_view text);
ParsedNetwork parse_network_with_lines(std::string_view text);
ParsedNetwork read_network_file(const std::string& path);

/// One "u v" line per segment in stored order.
void write_network(std::ostream& out, const Network& net);
/// One "compact original" line per node.
void write_mapping(std::ostream& out, const IndexMapping& mapping);

struct CompactedNetwork {
  Network network;
  IndexMapping mapping;
};

/// Relabels nodes to 0..N-1 in order of first appearance.
CompactedNetwork compact_indices(const Network& net);
Network restore_indices(const Network& net, const IndexMapping& mapping);

/// Requires dense indices; throws PreconditionError otherwise.
AdjacencyMap build_adjacency(const Network& net);

}  // namespace netconn
