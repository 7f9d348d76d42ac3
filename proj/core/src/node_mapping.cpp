#include "netconn/node_mapping.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "netconn/error.hpp"
#include "netconn/partition.hpp"

namespace netconn {

namespace {

// Yields start nodes that have not been removed yet, in the order the rule
// dictates. Lowest-index uses a monotone cursor, so the total scan is O(N).
class StartPicker {
 public:
  StartPicker(std::size_t n, StartRule rule) {
    if (rule.kind == StartRule::Kind::seeded_random) {
      order_.resize(n);
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      std::mt19937_64 rng(rule.seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
    size_ = n;
  }

  // Returns size_ when exhausted.
  std::size_t next(const std::vector<bool>& removed) {
    while (cursor_ < size_) {
      const std::size_t v = order_.empty() ? cursor_ : order_[cursor_];
      if (!removed[v]) return v;
      ++cursor_;
    }
    return size_;
  }

 private:
  std::vector<std::size_t> order_;
  std::size_t size_ = 0;
  std::size_t cursor_ = 0;
};

}  // namespace

std::vector<Partition> find_partitions_node_mapping(const AdjacencyMap& adj, StartRule start,
                                                    NodeMappingTrace* trace) {
  const std::size_t n = adj.node_count();
  if (n == 0) {
    throw PreconditionError("node mapping needs a non-empty adjacency map");
  }

  std::vector<bool> removed(n, false);
  std::vector<bool> in_partition(n, false);
  NodeMappingTrace local;
  local.slots = {removed.size() + in_partition.size(), adj.entry_count()};

  std::vector<Partition> parts;
  StartPicker picker(n, start);

  for (std::size_t seed = picker.next(removed); seed < n; seed = picker.next(removed)) {
    std::vector<std::size_t> frontier;
    frontier.push_back(seed);
    in_partition[seed] = true;
    ++local.frontier_pushes;

    // Nodes before `head` are expanded (removed); the rest are pending.
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const std::size_t u = frontier[head];
      for (const std::size_t w : adj.neighbors(u)) {
        ++local.neighbor_inspections;
        if (!in_partition[w]) {
          in_partition[w] = true;
          frontier.push_back(w);
          ++local.frontier_pushes;
        }
      }
      removed[u] = true;
      ++local.expansions;
    }

    for (const std::size_t v : frontier) in_partition[v] = false;
    parts.push_back({std::move(frontier), {}});
  }

  if (trace) *trace = local;
  return parts;
}

std::vector<Partition> assign_segments(const Network& net, std::vector<Partition> parts) {
  const auto label = partition_labels(net.node_count(), parts);
  for (auto& p : parts) p.segment_indices.clear();
  const auto segs = net.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::size_t k = label[segs[i].a];
    if (label[segs[i].b] != k) {
      throw InvariantError("segment " + std::to_string(i) + " joins partitions " + std::to_string(k) +
                           " and " + std::to_string(label[segs[i].b]));
    }
    parts[k].segment_indices.push_back(i);
  }
  return parts;
}

MemoryEstimate memory_estimate_node_mapping(std::size_t node_count, std::size_t segment_count) {
  if (node_count < 2 || segment_count < 1) {
    throw PreconditionError("memory estimate needs N >= 2 and M >= 1");
  }
  return {2 * node_count, 2 * segment_count};
}

}  // namespace netconn
