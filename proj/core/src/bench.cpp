#include "netconn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "netconn/error.hpp"
#include "netconn/generator.hpp"
#include "netconn/network.hpp"
#include "netconn/node_mapping.hpp"
#include "netconn/partition.hpp"

namespace netconn {

namespace {

using Clock = std::chrono::steady_clock;

struct Timing {
  double mean = 0.0;
  double stddev = 0.0;
  double fastest = 0.0;
};

// One discarded warm-up, then `repeats` timed calls.
template <typename Fn>
Timing time_repeated(std::size_t repeats, Fn&& fn) {
  volatile std::size_t sink = fn();
  std::vector<double> samples;
  samples.reserve(repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    sink = sink + fn();
    const auto t1 = Clock::now();
    samples.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  Timing t;
  t.fastest = samples.front();
  for (double s : samples) {
    t.mean += s;
    t.fastest = std::min(t.fastest, s);
  }
  t.mean /= static_cast<double>(samples.size());
  double var = 0.0;
  for (double s : samples) var += (s - t.mean) * (s - t.mean);
  t.stddev = samples.size() > 1 ? std::sqrt(var / static_cast<double>(samples.size() - 1)) : 0.0;
  return t;
}

double clock_tick_seconds() {
  return static_cast<double>(Clock::period::num) / static_cast<double>(Clock::period::den);
}

std::size_t integral_value(const Rational& v, SweepVariable var) {
  if (v.den() != 1) {
    throw PreconditionError(std::string(to_string(var)) + " sweep needs integer values, got " +
                            v.to_string());
  }
  return static_cast<std::size_t>(v.num());
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string render_value(const Rational& v) {
  return v.den() == 1 ? v.to_string() : v.to_decimal(6);
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::node_count: return "node_count";
    case SweepVariable::connectivity_index: return "connectivity_index";
    case SweepVariable::partition_count: return "partition_count";
  }
  return "?";
}

std::string_view to_string(Algorithm a) {
  return a == Algorithm::node_mapping ? "node_mapping" : "segment_mapping";
}

SweepVariable parse_sweep_variable(std::string_view text) {
  if (text == "node_count" || text == "nodes") return SweepVariable::node_count;
  if (text == "connectivity_index" || text == "cavg") return SweepVariable::connectivity_index;
  if (text == "partition_count" || text == "partitions") return SweepVariable::partition_count;
  throw PreconditionError("unknown sweep variable '" + std::string(text) + "'");
}

std::vector<BenchRecord> run_sweep(const SweepConfig& cfg, std::ostream* log) {
  if (cfg.values.empty()) {
    throw PreconditionError("sweep has no values");
  }
  for (std::size_t i = 1; i < cfg.values.size(); ++i) {
    if (!(cfg.values[i - 1] < cfg.values[i])) {
      throw PreconditionError("sweep values must be strictly increasing");
    }
  }
  if (cfg.repeats < 3) {
    throw PreconditionError("sweep needs at least 3 repeats");
  }

  std::vector<BenchRecord> records;
  records.reserve(2 * cfg.values.size());
  const double tick = clock_tick_seconds();

  for (std::size_t idx = 0; idx < cfg.values.size(); ++idx) {
    const Rational& value = cfg.values[idx];
    GeneratorConfig gen;
    gen.nodes = cfg.nodes;
    gen.c_target = cfg.c_avg;
    gen.partitions = cfg.partitions;
    gen.seed = cfg.seed + idx;
    switch (cfg.variable) {
      case SweepVariable::node_count: gen.nodes = integral_value(value, cfg.variable); break;
      case SweepVariable::connectivity_index: gen.c_target = value; break;
      case SweepVariable::partition_count: gen.partitions = integral_value(value, cfg.variable); break;
    }
    try {
      check_feasible(gen);
    } catch (const FeasibilityError& e) {
      throw FeasibilityError("sweep point " + std::to_string(idx) + " (" +
                             std::string(to_string(cfg.variable)) + "=" + value.to_string() +
                             "): " + e.what());
    }

    const Network net = compact_indices(generate_network(gen)).network;
    const AdjacencyMap adj = build_adjacency(net);
    const std::size_t n = net.node_count();
    const std::size_t m = net.segment_count();

    // A timing of wrong output is worthless: cross-check first.
    NodeMappingTrace nm_trace;
    SegmentMappingTrace sm_trace;
    const auto nm_parts = assign_segments(net, find_partitions_node_mapping(adj, {}, &nm_trace));
    const auto sm_parts = find_partitions_segment_mapping(net, cfg.segment_variant, {}, &sm_trace);
    if (!same_family(nm_parts, sm_parts) || nm_parts.size() != gen.partitions) {
      throw InvariantError("algorithms disagree at sweep point " + std::to_string(idx));
    }
    const auto nm_est = memory_estimate_node_mapping(n, m);
    const auto sm_est = memory_estimate_segment_mapping(n, m, cfg.segment_variant);
    if (nm_trace.slots != nm_est || sm_trace.slots != sm_est) {
      throw InvariantError("slot counters disagree with memory estimates at sweep point " +
                           std::to_string(idx));
    }

    const Timing nm_time = cfg.include_prep
        ? time_repeated(cfg.repeats, [&] {
            const auto a = build_adjacency(net);
            return find_partitions_node_mapping(a).size();
          })
        : time_repeated(cfg.repeats, [&] { return find_partitions_node_mapping(adj).size(); });
    const Timing sm_time = time_repeated(cfg.repeats, [&] {
      return find_partitions_segment_mapping(net, cfg.segment_variant).size();
    });

    BenchRecord base;
    base.variable = cfg.variable;
    base.sweep_value = value;
    base.nodes = n;
    base.segments = m;
    base.partitions = nm_parts.size();
    base.c_avg = Rational(2 * m, n);

    BenchRecord nm_rec = base;
    nm_rec.algorithm = Algorithm::node_mapping;
    nm_rec.mean_seconds = nm_time.mean;
    nm_rec.stddev_seconds = nm_time.stddev;
    nm_rec.slots = nm_est;
    nm_rec.coarse_timer = tick > 0.01 * nm_time.fastest;

    BenchRecord sm_rec = base;
    sm_rec.algorithm = Algorithm::segment_mapping;
    sm_rec.mean_seconds = sm_time.mean;
    sm_rec.stddev_seconds = sm_time.stddev;
    sm_rec.slots = sm_est;
    sm_rec.coarse_timer = tick > 0.01 * sm_time.fastest;

    if (log) {
      *log << to_string(cfg.variable) << '=' << value.to_string() << " N=" << n << " M=" << m
           << " P=" << base.partitions << "  node_mapping " << fixed(nm_time.mean, 6)
           << " s  segment_mapping " << fixed(sm_time.mean, 6) << " s\n";
      for (const auto* r : {&nm_rec, &sm_rec}) {
        if (r->coarse_timer) {
          *log << "warning: clock tick exceeds 1% of the fastest " << to_string(r->algorithm)
               << " run at " << to_string(cfg.variable) << '=' << value.to_string() << '\n';
        }
      }
    }
    records.push_back(nm_rec);
    records.push_back(sm_rec);
  }
  return records;
}

LinearFit linear_fit(const std::vector<BenchRecord>& records, Algorithm algorithm) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    if (r.algorithm != algorithm) continue;
    xs.push_back(r.sweep_value.to_double());
    ys.push_back(r.mean_seconds);
  }
  if (xs.size() < 4) {
    throw InsufficientDataError("linear fit needs at least 4 points for " +
                                std::string(to_string(algorithm)) + ", got " +
                                std::to_string(xs.size()));
  }

  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }

  LinearFit fit;
  fit.algorithm = algorithm;
  fit.points = xs.size();
  if (sxx == 0.0 || syy == 0.0) {
    fit.slope = 0.0;
    fit.intercept = my;
    fit.r_squared = 0.0;
    fit.degenerate = true;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.variable) << ',' << render_value(r.sweep_value) << ','
        << to_string(r.algorithm) << ',' << r.nodes << ',' << r.segments << ',' << r.partitions
        << ',' << r.c_avg.to_decimal(6) << ',' << fixed(r.mean_seconds, 9) << ','
        << fixed(r.stddev_seconds, 9) << ',' << r.slots.bool_slots << ',' << r.slots.int_slots
        << '\n';
  }
}

void write_fits(std::ostream& out, const std::vector<LinearFit>& fits) {
  out << "algorithm,points,slope,intercept,r_squared,degenerate\n";
  for (const auto& f : fits) {
    char slope[64];
    char intercept[64];
    std::snprintf(slope, sizeof slope, "%.9g", f.slope);
    std::snprintf(intercept, sizeof intercept, "%.9g", f.intercept);
    out << to_string(f.algorithm) << ',' << f.points << ',' << slope << ',' << intercept << ','
        << fixed(f.r_squared, 4) << ',' << (f.degenerate ? "true" : "false") << '\n';
  }
}

void write_csv(const std::vector<BenchRecord>& records, const std::vector<LinearFit>& fits,
               const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_csv(out, records);
    if (!out.flush()) throw Error("write to '" + path + "' failed");
  }
  if (fits.empty()) return;

  std::string fit_path = path;
  const auto slash = fit_path.find_last_of('/');
  const auto dot = fit_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    fit_path.erase(dot);
  }
  fit_path += ".fits.csv";
  std::ofstream out(fit_path, std::ios::binary);
  if (!out) throw Error("cannot open '" + fit_path + "' for writing");
  write_fits(out, fits);
  if (!out.flush()) throw Error("write to '" + fit_path + "' failed");
}

}  // namespace netconn
