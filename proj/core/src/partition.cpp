#include "netconn/partition.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "netconn/error.hpp"

namespace netconn {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

std::vector<Partition> canonicalize(std::vector<Partition> parts) {
  for (auto& p : parts) {
    std::sort(p.nodes.begin(), p.nodes.end());
    std::sort(p.segment_indices.begin(), p.segment_indices.end());
  }
  std::sort(parts.begin(), parts.end(), [](const Partition& x, const Partition& y) {
    if (x.nodes.empty() || y.nodes.empty()) return x.nodes.size() < y.nodes.size();
    return x.nodes.front() < y.nodes.front();
  });
  return parts;
}

bool same_node_family(const std::vector<Partition>& x, const std::vector<Partition>& y) {
  if (x.size() != y.size()) return false;
  auto strip = [](const std::vector<Partition>& parts) {
    std::vector<Partition> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back({p.nodes, {}});
    return canonicalize(std::move(out));
  };
  return strip(x) == strip(y);
}

bool same_family(const std::vector<Partition>& x, const std::vector<Partition>& y) {
  return x.size() == y.size() && canonicalize(x) == canonicalize(y);
}

std::vector<std::size_t> partition_labels(std::size_t node_count,
                                          const std::vector<Partition>& parts) {
  std::vector<std::size_t> label(node_count, kNone);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto v : parts[k].nodes) {
      if (v >= node_count) {
        throw InvariantError("partition " + std::to_string(k) + " holds node " +
                             std::to_string(v) + " outside 0.." + std::to_string(node_count - 1));
      }
      if (label[v] != kNone) {
        throw InvariantError("node " + std::to_string(v) + " appears in partitions " +
                             std::to_string(label[v]) + " and " + std::to_string(k));
      }
      label[v] = k;
    }
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    if (label[v] == kNone) {
      throw InvariantError("node " + std::to_string(v) + " is in no partition");
    }
  }
  return label;
}

void validate_cover(const Network& net, const std::vector<Partition>& parts, bool check_segments) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].nodes.empty()) {
      throw InvariantError("partition " + std::to_string(k) + " is empty");
    }
  }
  const auto label = partition_labels(net.node_count(), parts);
  if (!check_segments) return;

  std::vector<bool> seen(net.segment_count(), false);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto i : parts[k].segment_indices) {
      if (i >= net.segment_count()) {
        throw InvariantError("segment index " + std::to_string(i) + " out of range");
      }
      if (seen[i]) {
        throw InvariantError("segment " + std::to_string(i) + " assigned twice");
      }
      seen[i] = true;
      const auto& s = net.segment(i);
      if (label[s.a] != k || label[s.b] != k) {
        throw InvariantError("segment " + std::to_string(i) + " has an endpoint outside partition " +
                             std::to_string(k));
      }
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      throw InvariantError("segment " + std::to_string(i) + " is in no partition");
    }
  }
}

}  // namespace netconn
