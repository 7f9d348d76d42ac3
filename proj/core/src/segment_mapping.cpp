#include "netconn/segment_mapping.hpp"

#include <random>

#include "netconn/error.hpp"

namespace netconn {

namespace {

// Connected-node flags for the partition under construction. Clearing only
// touches the nodes set since the last clear.
class ConnectedSet {
 public:
  explicit ConnectedSet(std::size_t n) : flags_(n, false) {}

  bool contains(std::size_t v) const { return flags_[v]; }
  void add(std::size_t v) {
    flags_[v] = true;
    members_.push_back(v);
  }
  std::vector<std::size_t> take_and_clear() {
    for (auto v : members_) flags_[v] = false;
    return std::exchange(members_, {});
  }
  std::size_t slots() const { return flags_.size(); }

 private:
  std::vector<bool> flags_;
  std::vector<std::size_t> members_;
};

class SeedPicker {
 public:
  explicit SeedPicker(StartRule rule) : random_(rule.kind == StartRule::Kind::seeded_random), rng_(rule.seed) {}

  // Rank of the seed among the `remaining` unconsumed segments in stored order.
  std::size_t rank(std::size_t remaining) {
    if (!random_) return 0;
    return std::uniform_int_distribution<std::size_t>(0, remaining - 1)(rng_);
  }

 private:
  bool random_;
  std::mt19937_64 rng_;
};

// Absorbs `s` if it touches the connected set. Returns true when consumed and
// sets `grew` when a new node joined.
inline bool absorb(const Segment& s, ConnectedSet& connected, bool& grew) {
  const bool ca = connected.contains(s.a);
  const bool cb = connected.contains(s.b);
  if (!ca && !cb) return false;
  if (!ca) {
    connected.add(s.a);
    grew = true;
  }
  if (!cb) {
    connected.add(s.b);
    grew = true;
  }
  return true;
}

std::vector<Partition> run_direct(const Network& net, StartRule rule, SegmentMappingTrace& trace) {
  const auto segs = net.segments();
  // Working copy of the segment list; consumed entries are dropped. The
  // position list travels with it only to report segment membership.
  std::vector<Segment> work(segs.begin(), segs.end());
  std::vector<std::size_t> position(segs.size());
  for (std::size_t i = 0; i < position.size(); ++i) position[i] = i;

  ConnectedSet connected(net.node_count());
  trace.slots = {connected.slots(), 2 * work.size()};

  SeedPicker picker(rule);
  std::vector<Partition> parts;

  while (!work.empty()) {
    const std::size_t k = picker.rank(work.size());
    Partition part;
    connected.add(work[k].a);
    connected.add(work[k].b);
    part.segment_indices.push_back(position[k]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(k));
    position.erase(position.begin() + static_cast<std::ptrdiff_t>(k));

    std::size_t sweeps = 0;
    bool grew = true;
    while (grew && !work.empty()) {
      grew = false;
      ++sweeps;
      std::size_t kept = 0;
      for (std::size_t r = 0; r < work.size(); ++r) {
        ++trace.segment_inspections;
        if (absorb(work[r], connected, grew)) {
          part.segment_indices.push_back(position[r]);
        } else {
          work[kept] = work[r];
          position[kept] = position[r];
          ++kept;
        }
      }
      work.resize(kept);
      position.resize(kept);
    }
    if (!grew && !work.empty()) ++trace.stalled_partitions;

    trace.sweeps_per_partition.push_back(sweeps);
    part.nodes = connected.take_and_clear();
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<Partition> run_lazy(const Network& net, StartRule rule, SegmentMappingTrace& trace) {
  const auto segs = net.segments();
  std::vector<bool> removed(segs.size(), false);
  std::size_t remaining = segs.size();
  // Every index below `first` is consumed.
  std::size_t first = 0;

  ConnectedSet connected(net.node_count());
  trace.slots = {connected.slots() + removed.size(), 2 * segs.size()};

  SeedPicker picker(rule);
  std::vector<Partition> parts;

  while (remaining > 0) {
    while (removed[first]) ++first;
    std::size_t seed = first;
    for (std::size_t skip = picker.rank(remaining); skip > 0; --skip) {
      do ++seed;
      while (removed[seed]);
    }

    Partition part;
    connected.add(segs[seed].a);
    connected.add(segs[seed].b);
    part.segment_indices.push_back(seed);
    removed[seed] = true;
    --remaining;

    std::size_t sweeps = 0;
    bool grew = true;
    while (grew && remaining > 0) {
      grew = false;
      ++sweeps;
      while (removed[first]) ++first;
      for (std::size_t i = first; i < segs.size(); ++i) {
        if (removed[i]) continue;
        ++trace.segment_inspections;
        if (absorb(segs[i], connected, grew)) {
          removed[i] = true;
          --remaining;
          part.segment_indices.push_back(i);
        }
      }
    }
    if (!grew && remaining > 0) ++trace.stalled_partitions;

    trace.sweeps_per_partition.push_back(sweeps);
    part.nodes = connected.take_and_clear();
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

std::string_view to_string(RemovalVariant v) {
  return v == RemovalVariant::direct ? "direct" : "lazy";
}

std::vector<Partition> find_partitions_segment_mapping(const Network& net, RemovalVariant variant,
                                                       StartRule seed, SegmentMappingTrace* trace) {
  if (!net.is_dense()) {
    throw PreconditionError("segment mapping needs dense node indices; compact the network first");
  }
  SegmentMappingTrace local;
  auto parts = variant == RemovalVariant::direct ? run_direct(net, seed, local)
                                                 : run_lazy(net, seed, local);
  if (trace) *trace = std::move(local);
  return parts;
}

MemoryEstimate memory_estimate_segment_mapping(std::size_t node_count, std::size_t segment_count,
                                               RemovalVariant variant) {
  if (node_count < 2 || segment_count < 1) {
    throw PreconditionError("memory estimate needs N >= 2 and M >= 1");
  }
  const std::size_t extra = variant == RemovalVariant::lazy ? segment_count : 0;
  return {node_count + extra, 2 * segment_count};
}

}  // namespace netconn
