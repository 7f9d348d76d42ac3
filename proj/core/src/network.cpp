#include "netconn/network.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "netconn/error.hpp"

namespace netconn {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// A flat lookup table beats hashing whenever the id range is not much
// larger than the segment list.
bool use_flat_table(NodeId max_id, std::size_t segment_count) {
  return max_id < 4 * segment_count + 1024;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Network::Network(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw EmptyNetworkError();
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (s.a == s.b) {
      throw FormatError(0, "segment " + std::to_string(i) + " is a self-loop on node " +
                               std::to_string(s.a));
    }
    max_id_ = std::max({max_id_, s.a, s.b});
  }

  if (use_flat_table(max_id_, segments_.size())) {
    std::vector<bool> seen(max_id_ + 1, false);
    for (const auto& s : segments_) {
      node_count_ += !seen[s.a];
      seen[s.a] = true;
      node_count_ += !seen[s.b];
      seen[s.b] = true;
    }
  } else {
    std::unordered_set<NodeId> seen;
    seen.reserve(2 * segments_.size());
    for (const auto& s : segments_) {
      seen.insert(s.a);
      seen.insert(s.b);
    }
    node_count_ = seen.size();
  }
}

IndexMapping::IndexMapping(std::vector<NodeId> original_of) : original_of_(std::move(original_of)) {
  compact_of_.reserve(original_of_.size());
  for (std::size_t k = 0; k < original_of_.size(); ++k) {
    if (!compact_of_.emplace(original_of_[k], k).second) {
      throw MappingError("duplicate original id " + std::to_string(original_of_[k]));
    }
  }
}

NodeId IndexMapping::original(std::size_t compact) const {
  if (compact >= original_of_.size()) {
    throw MappingError("compact index " + std::to_string(compact) + " outside mapping of size " +
                       std::to_string(original_of_.size()));
  }
  return original_of_[compact];
}

std::size_t IndexMapping::compact(NodeId original) const {
  auto it = compact_of_.find(original);
  if (it == compact_of_.end()) {
    throw MappingError("node id " + std::to_string(original) + " not in mapping");
  }
  return it->second;
}

bool IndexMapping::is_identity() const noexcept {
  for (std::size_t k = 0; k < original_of_.size(); ++k) {
    if (original_of_[k] != k) return false;
  }
  return true;
}

AdjacencyMap::AdjacencyMap(std::vector<std::size_t> offsets, std::vector<std::size_t> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != targets_.size()) {
    throw InvariantError("malformed adjacency offsets");
  }
}

ParsedNetwork parse_network_with_lines(std::string_view text) {
  std::vector<Segment> segments;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto eol = text.find('\n');
    const auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }

    NodeId ids[2] = {0, 0};
    std::size_t count = 0;
    std::string_view rest = line;
    while (!rest.empty()) {
      std::size_t len = 0;
      while (len < rest.size() && !is_space(rest[len])) ++len;
      const auto token = rest.substr(0, len);
      rest = trim(rest.substr(len));
      if (count == 2) {
        throw FormatError(line_no, "expected 2 node indices, found more");
      }
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), ids[count]);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError(line_no, "'" + std::string(token) + "' is not a non-negative integer");
      }
      ++count;
    }
    if (count != 2) {
      throw FormatError(line_no, "expected 2 node indices, found " + std::to_string(count));
    }
    if (ids[0] == ids[1]) {
      throw FormatError(line_no, "self-loop segment (" + std::to_string(ids[0]) + " " +
                                     std::to_string(ids[1]) + ")");
    }
    segments.push_back({ids[0], ids[1]});
    lines.push_back(line_no);
  }

  return {Network(std::move(segments)), std::move(lines)};
}

Network parse_network(std::string_view text) {
  return parse_network_with_lines(text).network;
}

ParsedNetwork read_network_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network_with_lines(buf.str());
}

void write_network(std::ostream& out, const Network& net) {
  std::string buf;
  buf.reserve(net.segment_count() * 16);
  for (const auto& s : net.segments()) {
    buf += std::to_string(s.a);
    buf += ' ';
    buf += std::to_string(s.b);
    buf += '\n';
  }
  out << buf;
}

void write_mapping(std::ostream& out, const IndexMapping& mapping) {
  const auto ids = mapping.original_of();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    out << k << ' ' << ids[k] << '\n';
  }
}

CompactedNetwork compact_indices(const Network& net) {
  const auto segs = net.segments();
  std::vector<NodeId> original_of;
  original_of.reserve(net.node_count());
  std::vector<Segment> out;
  out.reserve(segs.size());

  if (use_flat_table(net.max_node_id(), segs.size())) {
    std::vector<std::size_t> table(net.max_node_id() + 1, kUnassigned);
    auto relabel = [&](NodeId id) -> NodeId {
      auto& slot = table[id];
      if (slot == kUnassigned) {
        slot = original_of.size();
        original_of.push_back(id);
      }
      return slot;
    };
    for (const auto& s : segs) {
      const NodeId a = relabel(s.a);
      out.push_back({a, relabel(s.b)});
    }
  } else {
    std::unordered_map<NodeId, std::size_t> table;
    table.reserve(net.node_count());
    auto relabel = [&](NodeId id) -> NodeId {
      auto [it, inserted] = table.try_emplace(id, original_of.size());
      if (inserted) original_of.push_back(id);
      return it->second;
    };
    for (const auto& s : segs) {
      const NodeId a = relabel(s.a);
      out.push_back({a, relabel(s.b)});
    }
  }

  return {Network(std::move(out)), IndexMapping(std::move(original_of))};
}

Network restore_indices(const Network& net, const IndexMapping& mapping) {
  std::vector<Segment> out;
  out.reserve(net.segment_count());
  for (const auto& s : net.segments()) {
    out.push_back({mapping.original(s.a), mapping.original(s.b)});
  }
  return Network(std::move(out));
}

AdjacencyMap build_adjacency(const Network& net) {
  if (!net.is_dense()) {
    throw PreconditionError("build_adjacency needs dense node indices; compact the network first");
  }
  const std::size_t n = net.node_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& s : net.segments()) {
    ++offsets[s.a + 1];
    ++offsets[s.b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    offsets[i + 1] += offsets[i];
  }
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  std::vector<std::size_t> targets(offsets.back());
  for (const auto& s : net.segments()) {
    targets[cursor[s.a]++] = s.b;
    targets[cursor[s.b]++] = s.a;
  }
  return AdjacencyMap(std::move(offsets), std::move(targets));
}

}  // namespace netconn
