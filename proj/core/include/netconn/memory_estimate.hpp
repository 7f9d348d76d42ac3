#pragma once

#include <cstddef>

namespace netconn {

/// Working-storage slot counts of a partition search: Boolean flag cells and
/// node-index integer cells.
struct MemoryEstimate {
  std::size_t bool_slots = 0;
  std::size_t int_slots = 0;

  friend bool operator==(const MemoryEstimate&, const MemoryEstimate&) = default;
};

}  // namespace netconn
