#include "netconn/stats.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "netconn/error.hpp"
#include "netconn/partition.hpp"

namespace netconn {

namespace {

// Partition-local view: nodes renumbered 0..n_p-1, incidence lists carrying
// the network segment index so parallel copies stay distinguishable.
struct LocalGraph {
  std::size_t node_count = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::pair<std::size_t, std::size_t>> incidence;  // (neighbour, segment)
};

LocalGraph make_local(const Network& net, const Partition& p) {
  std::vector<std::size_t> sorted = p.nodes;
  std::sort(sorted.begin(), sorted.end());
  auto local = [&](NodeId v) -> std::size_t {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it == sorted.end() || *it != v) {
      throw PreconditionError("segment endpoint " + std::to_string(v) + " lies outside the partition");
    }
    return static_cast<std::size_t>(it - sorted.begin());
  };

  LocalGraph g;
  g.node_count = sorted.size();
  g.offsets.assign(g.node_count + 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  ends.reserve(p.segment_indices.size());
  for (auto i : p.segment_indices) {
    const auto& s = net.segment(i);
    ends.emplace_back(local(s.a), local(s.b));
    ++g.offsets[ends.back().first + 1];
    ++g.offsets[ends.back().second + 1];
  }
  for (std::size_t v = 0; v < g.node_count; ++v) g.offsets[v + 1] += g.offsets[v];
  g.incidence.resize(g.offsets.back());
  std::vector<std::size_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const auto [a, b] = ends[k];
    g.incidence[cursor[a]++] = {b, p.segment_indices[k]};
    g.incidence[cursor[b]++] = {a, p.segment_indices[k]};
  }
  return g;
}

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
constexpr std::size_t kNoSegment = static_cast<std::size_t>(-1);

// Iterative lowlink search from local node 0. Returns the number of nodes
// reached and appends bridge segment indices to `bridges`.
std::size_t lowlink_search(const LocalGraph& g, std::vector<std::size_t>& bridges) {
  if (g.node_count == 0) return 0;
  std::vector<std::size_t> disc(g.node_count, kUnvisited);
  std::vector<std::size_t> low(g.node_count, 0);

  struct Frame {
    std::size_t node;
    std::size_t via_segment;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t clock = 0;
  disc[0] = low[0] = clock++;
  stack.push_back({0, kNoSegment, g.offsets[0]});

  while (!stack.empty()) {
    auto& top = stack.back();
    const std::size_t v = top.node;
    if (top.next < g.offsets[v + 1]) {
      const auto [w, seg] = g.incidence[top.next++];
      if (seg == top.via_segment) continue;
      if (disc[w] == kUnvisited) {
        disc[w] = low[w] = clock++;
        stack.push_back({w, seg, g.offsets[w]});
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    const std::size_t via = top.via_segment;
    stack.pop_back();
    if (!stack.empty()) {
      const std::size_t u = stack.back().node;
      low[u] = std::min(low[u], low[v]);
      if (low[v] > disc[u]) bridges.push_back(via);
    }
  }
  return clock;
}

}  // namespace

NodeClass classify_node(std::size_t c) {
  if (c == 0) {
    throw PreconditionError("connectivity index 0 (singular node) has no class");
  }
  if (c == 1) return NodeClass::boundary;
  if (c == 2) return NodeClass::bridge;
  return NodeClass::bifurcation;
}

std::string_view to_string(NodeClass cls) {
  switch (cls) {
    case NodeClass::boundary: return "boundary";
    case NodeClass::bridge: return "bridge";
    case NodeClass::bifurcation: return "bifurcation";
  }
  return "?";
}

std::string_view to_string(TopologyClass cls) {
  switch (cls) {
    case TopologyClass::open: return "open";
    case TopologyClass::closed: return "closed";
    case TopologyClass::semi_closed: return "semi-closed";
  }
  return "?";
}

std::vector<std::size_t> find_bridges(const Network& net, const Partition& p) {
  const auto g = make_local(net, p);
  std::vector<std::size_t> bridges;
  if (lowlink_search(g, bridges) != g.node_count) {
    throw PreconditionError("partition is not connected");
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

TopologyClass classify_partition(const Network& net, const Partition& p) {
  if (p.nodes.empty()) {
    throw PreconditionError("empty partition");
  }
  const auto bridges = find_bridges(net, p);
  const std::size_t n = p.nodes.size();
  const std::size_t m = p.segment_indices.size();
  if (m + 1 == n) return TopologyClass::open;
  if (bridges.empty()) return TopologyClass::closed;
  return TopologyClass::semi_closed;
}

NetworkStats compute_stats(const Network& net, const std::vector<Partition>& parts) {
  if (!net.is_dense()) {
    throw PreconditionError("compute_stats needs dense node indices");
  }
  validate_cover(net, parts, /*check_segments=*/true);

  NetworkStats st;
  st.node_count = net.node_count();
  st.segment_count = net.segment_count();
  st.c_avg = Rational(2 * st.segment_count, st.node_count);

  std::vector<std::size_t> degree(st.node_count, 0);
  for (const auto& s : net.segments()) {
    ++degree[s.a];
    ++degree[s.b];
  }
  for (auto c : degree) {
    ++st.degree_histogram[c];
    switch (classify_node(c)) {
      case NodeClass::boundary: ++st.boundary; break;
      case NodeClass::bridge: ++st.bridge; break;
      case NodeClass::bifurcation: ++st.bifurcation; break;
    }
  }

  st.partition_count = parts.size();
  st.partition_classes.reserve(parts.size());
  for (const auto& p : parts) {
    st.partition_classes.push_back(classify_partition(net, p));
  }
  return st;
}

}  // namespace netconn
