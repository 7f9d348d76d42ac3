#pragma once

#include <cstdint>

namespace netconn {

/// How each partition search picks its starting node or seed segment.
struct StartRule {
  enum class Kind {
    lowest_index,   // lowest-index unconsumed element
    seeded_random,  // uniform over unconsumed elements, reproducible by seed
  };

  Kind kind = Kind::lowest_index;
  std::uint64_t seed = 0;

  static StartRule lowest() { return {}; }
  static StartRule random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }
};

}  // namespace netconn
