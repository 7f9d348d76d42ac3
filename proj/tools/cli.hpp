#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netconn/network.hpp"

namespace netconn::cli {

/// Process exit codes. Values are stable.
enum class ExitStatus : int {
  ok = 0,                   // success, or a totally connected network
  partitioned = 1,          // `check` found more than one partition
  input_error = 2,          // unreadable or malformed input, bad flags
  infeasible = 3,           // generator or sweep configuration cannot be met
  verification_failed = 4,  // `--verify` found a disagreement with the oracles
};

/// Parses `args` (without the program name) and runs the chosen subcommand.
ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the partition manifest. `net` is compacted; nodes are printed
/// through `mapping` and segments as their source line numbers.
void write_manifest(std::ostream& out, const Network& net, const IndexMapping& mapping,
                    const std::vector<std::size_t>& lines, const std::vector<Partition>& parts);

}  // namespace netconn::cli
