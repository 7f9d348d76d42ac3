#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "netconn/memory_estimate.hpp"
#include "netconn/rational.hpp"
#include "netconn/segment_mapping.hpp"

namespace netconn {

enum class SweepVariable { node_count, connectivity_index, partition_count };
enum class Algorithm { node_mapping, segment_mapping };

std::string_view to_string(SweepVariable v);
std::string_view to_string(Algorithm a);
/// Accepts the canonical names plus the short forms nodes|cavg|partitions.
SweepVariable parse_sweep_variable(std::string_view text);

struct SweepConfig {
  SweepVariable variable = SweepVariable::node_count;
  /// Strictly increasing sweep points.
  std::vector<Rational> values;
  /// Held-constant parameters; the swept one is overridden per point.
  std::size_t nodes = 500'000;
  Rational c_avg{5};
  std::size_t partitions = 1;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  /// Time adjacency construction as part of node mapping.
  bool include_prep = false;
  RemovalVariant segment_variant = RemovalVariant::direct;
};

struct BenchRecord {
  SweepVariable variable = SweepVariable::node_count;
  Rational sweep_value;
  Algorithm algorithm = Algorithm::node_mapping;
  std::size_t nodes = 0;
  std::size_t segments = 0;
  std::size_t partitions = 0;
  Rational c_avg;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
  MemoryEstimate slots;
  /// Clock tick exceeds 1% of the fastest repeat.
  bool coarse_timer = false;
};

struct LinearFit {
  Algorithm algorithm = Algorithm::node_mapping;
  std::size_t points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  /// Zero variance in time or sweep value; r_squared is then reported as 0.
  bool degenerate = false;
};

/// Generates one instance per point (seed = base seed + point index), checks
/// both algorithms agree, then times each over a warm-up plus `repeats`
/// runs. Records come in sweep order, node mapping first at each point.
/// Progress lines go to `log` when given.
std::vector<BenchRecord> run_sweep(const SweepConfig& cfg, std::ostream* log = nullptr);

/// Least squares of mean_seconds on sweep_value. Needs >= 4 points.
LinearFit linear_fit(const std::vector<BenchRecord>& records, Algorithm algorithm);

inline constexpr std::string_view kCsvHeader =
    "sweep_variable,sweep_value,algorithm,N,M,P,c_avg,mean_seconds,stddev_seconds,bool_slots,"
    "int_slots";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_fits(std::ostream& out, const std::vector<LinearFit>& fits);
/// Records go to `path`; fits, when present, to `path` with ".fits.csv"
/// replacing its extension. Throws Error on I/O failure.
void write_csv(const std::vector<BenchRecord>& records, const std::vector<LinearFit>& fits,
               const std::string& path);

}  // namespace netconn
