#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "netconn/network.hpp"

namespace netconn::testing {

inline Network make_net(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Segment> segs;
  for (auto [a, b] : edges) segs.push_back({a, b});
  return Network(std::move(segs));
}

/// Uniform random multigraph over dense ids 0..n-1 with m segments and no
/// self-loops. Nodes that end up isolated are simply absent, so the result
/// is compacted before return.
inline Network random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Segment> segs;
  while (segs.size() < m) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a != b) segs.push_back({a, b});
  }
  return compact_indices(Network(std::move(segs))).network;
}

/// Transitive closure by repeated relaxation over the segment list; slow and
/// independent of every traversal in the library. reach[u][v] for dense ids.
inline std::vector<std::vector<bool>> brute_force_closure(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = true;
  for (const auto& s : net.segments()) reach[s.a][s.b] = reach[s.b][s.a] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

/// Node-set family from a closure: each class listed once, ascending.
inline std::vector<std::vector<std::size_t>> closure_classes(
    const std::vector<std::vector<bool>>& reach) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> done(reach.size(), false);
  for (std::size_t v = 0; v < reach.size(); ++v) {
    if (done[v]) continue;
    classes.emplace_back();
    for (std::size_t w = 0; w < reach.size(); ++w) {
      if (reach[v][w]) {
        classes.back().push_back(w);
        done[w] = true;
      }
    }
  }
  return classes;
}

/// Connected after dropping segment `skip` (pass npos to keep all)?
/// Counts nodes reached by relaxation until no change.
inline bool connected_without(const Network& net, std::size_t skip) {
  const std::size_t n = net.node_count();
  std::vector<bool> in(n, false);
  in[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    const auto segs = net.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (i == skip) continue;
      if (in[segs[i].a] != in[segs[i].b]) {
        in[segs[i].a] = in[segs[i].b] = true;
        changed = true;
      }
    }
  }
  for (bool b : in)
    if (!b) return false;
  return true;
}

}  // namespace netconn::testing
