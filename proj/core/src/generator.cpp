#include "netconn/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "netconn/error.hpp"

#ifndef NDEBUG
#include "netconn/oracle.hpp"
#endif

namespace netconn {

namespace {

constexpr int kMaxPairDraws = 100;

std::uint64_t pair_cap(std::uint64_t n) { return n * (n - 1) / 2; }

// Draws extra segments for one partition of `n` local nodes, avoiding pairs
// already in `used` until every pair is taken.
class PairSampler {
 public:
  PairSampler(std::size_t n, std::mt19937_64& rng) : n_(n), rng_(rng) {}

  void mark(std::size_t a, std::size_t b) { used_.insert(key(a, b)); }

  std::pair<std::size_t, std::size_t> draw(bool allow_parallel) {
    if (used_.size() < pair_cap(n_)) {
      for (int attempt = 0; attempt < kMaxPairDraws; ++attempt) {
        auto [a, b] = random_pair();
        if (used_.insert(key(a, b)).second) return {a, b};
      }
      // Dense regime: scan for the next free pair. The cursor only moves
      // forward because pairs are never released.
      for (; scan_a_ < n_; ++scan_a_, scan_b_ = scan_a_ + 1) {
        if (scan_b_ <= scan_a_) scan_b_ = scan_a_ + 1;
        for (; scan_b_ < n_; ++scan_b_) {
          if (used_.insert(key(scan_a_, scan_b_)).second) return {scan_a_, scan_b_++};
        }
      }
    }
    if (!allow_parallel) {
      throw FeasibilityError("partition of " + std::to_string(n_) + " nodes has no free node pair");
    }
    return random_pair();
  }

 private:
  std::uint64_t key(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n_ + b;
  }

  std::pair<std::size_t, std::size_t> random_pair() {
    const std::size_t a = std::uniform_int_distribution<std::size_t>(0, n_ - 1)(rng_);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, n_ - 2)(rng_);
    if (b >= a) ++b;
    return {a, b};
  }

  std::size_t n_;
  std::mt19937_64& rng_;
  std::unordered_set<std::uint64_t> used_;
  std::size_t scan_a_ = 0;
  std::size_t scan_b_ = 1;
};

std::vector<NodeId> sparse_ids(std::size_t count, std::mt19937_64& rng) {
  const std::uint64_t range = std::max<std::uint64_t>(16 * static_cast<std::uint64_t>(count), 1024);
  std::uniform_int_distribution<std::uint64_t> dist(0, range - 1);
  std::unordered_set<NodeId> taken;
  taken.reserve(count);
  std::vector<NodeId> ids;
  ids.reserve(count);
  while (ids.size() < count) {
    const NodeId id = dist(rng);
    if (taken.insert(id).second) ids.push_back(id);
  }
  return ids;
}

}  // namespace

std::vector<std::size_t> partition_sizes(std::size_t nodes, std::size_t partitions) {
  if (partitions == 0) {
    throw FeasibilityError("partition count must be at least 1");
  }
  std::vector<std::size_t> sizes(partitions, nodes / partitions);
  for (std::size_t i = 0; i < nodes % partitions; ++i) ++sizes[i];
  return sizes;
}

std::size_t segments_for(std::size_t partition_nodes, const Rational& c_target) {
  const auto num = static_cast<unsigned __int128>(partition_nodes) * c_target.num() + c_target.den();
  return static_cast<std::size_t>(num / (2 * static_cast<unsigned __int128>(c_target.den())));
}

void check_feasible(const GeneratorConfig& cfg) {
  if (cfg.partitions == 0) {
    throw FeasibilityError("partition count must be at least 1");
  }
  if (cfg.nodes < 2 * cfg.partitions) {
    throw FeasibilityError("need at least 2 nodes per partition: " + std::to_string(cfg.nodes) +
                           " nodes for " + std::to_string(cfg.partitions) + " partitions");
  }
  // Sizes differ by at most one, so checking both extremes covers every partition.
  const auto sizes = partition_sizes(cfg.nodes, cfg.partitions);
  for (const std::size_t n : {sizes.back(), sizes.front()}) {
    const std::size_t m = segments_for(n, cfg.c_target);
    if (m + 1 < n) {
      throw FeasibilityError("c_target " + cfg.c_target.to_string() + " too low: a partition of " +
                             std::to_string(n) + " nodes needs at least " + std::to_string(n - 1) +
                             " segments, target gives " + std::to_string(m));
    }
    if (!cfg.allow_parallel && m > pair_cap(n)) {
      throw FeasibilityError("c_target " + cfg.c_target.to_string() +
                             " exceeds the simple-graph cap: a partition of " + std::to_string(n) +
                             " nodes holds at most " + std::to_string(pair_cap(n)) +
                             " distinct segments, target gives " + std::to_string(m));
    }
  }
}

Network generate_network(const GeneratorConfig& cfg) {
  check_feasible(cfg);
  std::mt19937_64 rng(cfg.seed);
  const auto sizes = partition_sizes(cfg.nodes, cfg.partitions);

  std::vector<Segment> segments;
  std::size_t total = 0;
  for (auto n : sizes) total += segments_for(n, cfg.c_target);
  segments.reserve(total);

  std::size_t base = 0;
  std::vector<std::size_t> order;
  for (const std::size_t n : sizes) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    PairSampler sampler(n, rng);
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      sampler.mark(order[i], order[j]);
      segments.push_back({base + order[i], base + order[j]});
    }
    const std::size_t extra = segments_for(n, cfg.c_target) - (n - 1);
    for (std::size_t e = 0; e < extra; ++e) {
      const auto [a, b] = sampler.draw(cfg.allow_parallel);
      segments.push_back({base + a, base + b});
    }
    base += n;
  }

  // Random labels and segment order across the whole network, so partitions
  // interleave in both the node index space and the segment list.
  std::vector<NodeId> label(cfg.nodes);
  if (cfg.scatter_indices) {
    label = sparse_ids(cfg.nodes, rng);
  } else {
    std::iota(label.begin(), label.end(), NodeId{0});
    std::shuffle(label.begin(), label.end(), rng);
  }
  std::shuffle(segments.begin(), segments.end(), rng);
  for (auto& s : segments) {
    s = (rng() & 1) ? Segment{label[s.b], label[s.a]} : Segment{label[s.a], label[s.b]};
  }

  Network net(std::move(segments));
#ifndef NDEBUG
  if (union_find_partitions(compact_indices(net).network).size() != cfg.partitions) {
    throw InvariantError("generated network has the wrong partition count");
  }
#endif
  return net;
}

}  // namespace netconn
