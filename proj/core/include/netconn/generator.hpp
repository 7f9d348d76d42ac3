#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netconn/network.hpp"
#include "netconn/rational.hpp"

namespace netconn {

struct GeneratorConfig {
  std::size_t nodes = 100;
  /// Target average connectivity index 2M/N.
  Rational c_target{5};
  std::size_t partitions = 1;
  std::uint64_t seed = 0;
  /// Relabel nodes onto a sparse random id set.
  bool scatter_indices = false;
  /// Permit parallel segments once a partition's simple-graph cap is hit.
  bool allow_parallel = false;
};

/// Node counts per partition, as even as possible (sizes differ by <= 1).
std::vector<std::size_t> partition_sizes(std::size_t nodes, std::size_t partitions);

/// round(n * c / 2), halves rounded up.
std::size_t segments_for(std::size_t partition_nodes, const Rational& c_target);

/// Throws FeasibilityError naming the violated bound.
void check_feasible(const GeneratorConfig& cfg);

/// Random network with exactly `cfg.partitions` components. Each partition
/// gets a random spanning tree (every node attached to a random earlier node
/// of a shuffled order) plus extra segments between random unused pairs.
/// Node labels and segment order are shuffled across the whole network.
/// Deterministic for a fixed config on a given standard library.
Network generate_network(const GeneratorConfig& cfg);

}  // namespace netconn
