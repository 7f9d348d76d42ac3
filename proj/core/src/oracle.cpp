#include "netconn/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "netconn/error.hpp"
#include "netconn/partition.hpp"

namespace netconn {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

ReachabilityRow reachability_row(const AdjacencyMap& adj, std::size_t origin) {
  const std::size_t n = adj.node_count();
  if (origin >= n) {
    throw PreconditionError("origin " + std::to_string(origin) + " out of range for " +
                            std::to_string(n) + " nodes");
  }
  ReachabilityRow row{origin, std::vector<bool>(n, false)};
  std::vector<std::size_t> stack{origin};
  row.reached[origin] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const std::size_t w : adj.neighbors(v)) {
      if (!row.reached[w]) {
        row.reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  return row;
}

bool direct_inspection_connected(const AdjacencyMap& adj, std::size_t origin) {
  const auto row = reachability_row(adj, origin);
  return std::all_of(row.reached.begin(), row.reached.end(), [](bool b) { return b; });
}

bool triangular_pair_connected(const AdjacencyMap& adj, std::size_t node_limit) {
  const std::size_t n = adj.node_count();
  if (n > node_limit) {
    throw SizeGuardError("pairwise check refused: " + std::to_string(n) + " nodes exceeds limit " +
                         std::to_string(node_limit));
  }
  // Upper triangle only: pair (n, m) is tested once, from the smaller index.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto row = reachability_row(adj, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!row.reached[j]) return false;
    }
  }
  return true;
}

std::vector<Partition> union_find_partitions(const Network& net) {
  if (!net.is_dense()) {
    throw PreconditionError("union_find_partitions needs dense node indices");
  }
  const std::size_t n = net.node_count();
  DisjointSets sets(n);
  for (const auto& s : net.segments()) sets.unite(s.a, s.b);

  std::vector<std::size_t> slot(n, n);
  std::vector<Partition> parts;
  parts.reserve(sets.set_count());
  // Ascending node scan makes each partition's first node its minimum.
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = parts.size();
      parts.emplace_back();
    }
    parts[slot[root]].nodes.push_back(v);
  }
  const auto segs = net.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    parts[slot[sets.find(segs[i].a)]].segment_indices.push_back(i);
  }
  return parts;
}

}  // namespace netconn
