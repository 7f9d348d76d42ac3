#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "netconn/bench.hpp"
#include "netconn/error.hpp"
#include "netconn/generator.hpp"
#include "netconn/node_mapping.hpp"
#include "netconn/oracle.hpp"
#include "netconn/partition.hpp"
#include "netconn/segment_mapping.hpp"
#include "netconn/stats.hpp"

namespace netconn::cli {

namespace {

enum class AlgorithmChoice { node, segment };

struct Loaded {
  CompactedNetwork compacted;
  std::vector<std::size_t> lines;
};

Loaded load(const std::string& path) {
  auto parsed = read_network_file(path);
  return {compact_indices(parsed.network), std::move(parsed.lines)};
}

// Partitions with segment sets attached, whichever algorithm runs.
std::vector<Partition> partitions_of(const Network& net, AlgorithmChoice algo) {
  if (algo == AlgorithmChoice::node) {
    return assign_segments(net, find_partitions_node_mapping(build_adjacency(net)));
  }
  return find_partitions_segment_mapping(net);
}

std::string c_avg_text(const Rational& c) { return c.to_string() + " (" + c.to_decimal(4) + ")"; }

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  fn(file);
  if (!file.flush()) throw Error("write to '" + path + "' failed");
}

ExitStatus cmd_check(const std::string& file, AlgorithmChoice algo, bool verify, std::ostream& out,
                     std::ostream& err) {
  const auto loaded = load(file);
  const Network& net = loaded.compacted.network;
  const auto parts = partitions_of(net, algo);

  out << "partitions: " << parts.size() << '\n'
      << "nodes: " << net.node_count() << '\n'
      << "segments: " << net.segment_count() << '\n'
      << "c_avg: " << c_avg_text(Rational(2 * net.segment_count(), net.node_count())) << '\n';

  if (verify) {
    const auto reference = union_find_partitions(net);
    const auto adj = build_adjacency(net);
    const bool connected = direct_inspection_connected(adj, 0);
    if (!same_family(parts, reference)) {
      err << "verification FAILED: partitions differ from the union-find reference ("
          << parts.size() << " vs " << reference.size() << ")\n";
      return ExitStatus::verification_failed;
    }
    if (connected != (parts.size() == 1)) {
      err << "verification FAILED: direct inspection says "
          << (connected ? "connected" : "not connected") << " but " << parts.size()
          << " partition(s) were found\n";
      return ExitStatus::verification_failed;
    }
    out << "verify: ok\n";
  }
  return parts.size() == 1 ? ExitStatus::ok : ExitStatus::partitioned;
}

ExitStatus cmd_partitions(const std::string& file, AlgorithmChoice algo, const std::string& out_path,
                          std::ostream& out) {
  const auto loaded = load(file);
  const auto parts = partitions_of(loaded.compacted.network, algo);
  emit(out_path, out, [&](std::ostream& os) {
    write_manifest(os, loaded.compacted.network, loaded.compacted.mapping, loaded.lines, parts);
  });
  return ExitStatus::ok;
}

ExitStatus cmd_stats(const std::string& file, std::ostream& out) {
  const auto loaded = load(file);
  const Network& net = loaded.compacted.network;
  const auto st = compute_stats(net, find_partitions_segment_mapping(net));

  out << "nodes: " << st.node_count << '\n'
      << "segments: " << st.segment_count << '\n'
      << "c_avg: " << c_avg_text(st.c_avg) << '\n'
      << "boundary (c=1): " << st.boundary << '\n'
      << "bridge (c=2): " << st.bridge << '\n'
      << "bifurcation (c>2): " << st.bifurcation << '\n';
  for (const auto& [c, count] : st.degree_histogram) {
    out << "c=" << c << ": " << count << '\n';
  }
  out << "partitions: " << st.partition_count << '\n';
  for (std::size_t k = 0; k < st.partition_classes.size(); ++k) {
    out << "partition " << k + 1 << ": " << to_string(st.partition_classes[k]) << '\n';
  }
  return ExitStatus::ok;
}

ExitStatus cmd_generate(const GeneratorConfig& cfg, const std::string& out_path, std::ostream& out) {
  const Network net = generate_network(cfg);
  emit(out_path, out, [&](std::ostream& os) { write_network(os, net); });
  return ExitStatus::ok;
}

ExitStatus cmd_bench(SweepConfig cfg, const std::string& values, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
  std::stringstream ss(values);
  for (std::string item; std::getline(ss, item, ',');) {
    cfg.values.push_back(Rational::parse(item));
  }
  const auto records = run_sweep(cfg, &err);

  std::vector<LinearFit> fits;
  if (cfg.values.size() >= 4) {
    for (auto algo : {Algorithm::node_mapping, Algorithm::segment_mapping}) {
      fits.push_back(linear_fit(records, algo));
      const auto& f = fits.back();
      char line[160];
      std::snprintf(line, sizeof line, "fit %s: slope=%.6g intercept=%.6g r2=%.4f%s\n",
                    std::string(to_string(algo)).c_str(), f.slope, f.intercept, f.r_squared,
                    f.degenerate ? " (degenerate)" : "");
      err << line;
    }
  }
  if (out_path.empty()) {
    write_csv(out, records);
  } else {
    write_csv(records, fits, out_path);
  }
  return ExitStatus::ok;
}

ExitStatus cmd_compact(const std::string& file, const std::string& out_path,
                       const std::string& map_path, std::ostream& out) {
  const auto loaded = load(file);
  emit(out_path, out, [&](std::ostream& os) { write_network(os, loaded.compacted.network); });
  if (!map_path.empty()) {
    emit(map_path, out, [&](std::ostream& os) { write_mapping(os, loaded.compacted.mapping); });
  }
  return ExitStatus::ok;
}

}  // namespace

void write_manifest(std::ostream& out, const Network& net, const IndexMapping& mapping,
                    const std::vector<std::size_t>& lines, const std::vector<Partition>& parts) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    if (k > 0) out << '\n';
    out << "partition " << k + 1 << ": nodes=" << p.nodes.size()
        << " segments=" << p.segment_indices.size()
        << " class=" << to_string(classify_partition(net, p)) << '\n';

    std::vector<NodeId> ids;
    ids.reserve(p.nodes.size());
    for (auto v : p.nodes) ids.push_back(mapping.original(v));
    std::sort(ids.begin(), ids.end());
    out << "nodes:";
    for (auto id : ids) out << ' ' << id;
    out << '\n';

    std::vector<std::size_t> segs;
    segs.reserve(p.segment_indices.size());
    for (auto i : p.segment_indices) segs.push_back(lines.empty() ? i + 1 : lines[i]);
    std::sort(segs.begin(), segs.end());
    out << "segments(lines):";
    for (auto s : segs) out << ' ' << s;
    out << '\n';
  }
}

ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity testing and partition enumeration for segment networks", "netconn"};
  app.require_subcommand(1);

  const std::map<std::string, AlgorithmChoice> algo_names{{"node", AlgorithmChoice::node},
                                                          {"segment", AlgorithmChoice::segment}};
  std::string file;
  std::string out_path;
  std::string map_path;
  AlgorithmChoice algo = AlgorithmChoice::segment;
  bool verify = false;

  auto* check = app.add_subcommand("check", "Test total connectivity; exit 0 when connected, 1 when partitioned");
  check->add_option("file", file, "Edge-list file")->required();
  check->add_option("--algorithm", algo, "node or segment")
      ->transform(CLI::CheckedTransformer(algo_names, CLI::ignore_case));
  check->add_flag("--verify", verify, "Cross-check against the reference oracles");

  auto* partitions = app.add_subcommand("partitions", "Write the partition manifest");
  partitions->add_option("file", file, "Edge-list file")->required();
  partitions->add_option("--algorithm", algo, "node or segment")
      ->transform(CLI::CheckedTransformer(algo_names, CLI::ignore_case));
  partitions->add_option("--out", out_path, "Manifest path (default stdout)");

  auto* stats = app.add_subcommand("stats", "Print node classes, c_avg and partition topology");
  stats->add_option("file", file, "Edge-list file")->required();

  GeneratorConfig gen;
  std::string gen_cavg = "5";
  auto* generate = app.add_subcommand("generate", "Write a random network");
  generate->add_option("--nodes", gen.nodes, "Total node count")->required();
  generate->add_option("--cavg", gen_cavg, "Target average connectivity index (e.g. 5, 2.5, 11/6)");
  generate->add_option("--partitions", gen.partitions, "Number of partitions");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_flag("--scatter", gen.scatter_indices, "Relabel nodes onto sparse ids");
  generate->add_flag("--allow-parallel", gen.allow_parallel,
                     "Allow parallel segments beyond the simple-graph cap");
  generate->add_option("--out", out_path, "Output path (default stdout)");

  SweepConfig sweep;
  std::string sweep_name;
  std::string sweep_values;
  std::string sweep_cavg = "5";
  bool include_prep = false;
  auto* bench = app.add_subcommand("bench", "Time both algorithms over a parameter sweep, CSV out");
  bench->add_option("--sweep", sweep_name, "nodes | cavg | partitions")->required();
  bench->add_option("--values", sweep_values, "Comma-separated increasing sweep points")->required();
  bench->add_option("--nodes", sweep.nodes, "Fixed node count");
  bench->add_option("--cavg", sweep_cavg, "Fixed average connectivity index");
  bench->add_option("--partitions", sweep.partitions, "Fixed partition count");
  bench->add_option("--repeats", sweep.repeats, "Timed repeats per point (>= 3)");
  bench->add_option("--seed", sweep.seed, "Base seed");
  bench->add_flag("--include-prep", include_prep, "Include adjacency construction in node mapping time");
  std::string variant = "direct";
  bench->add_option("--variant", variant, "Segment removal: direct or lazy")
      ->check(CLI::IsMember({"direct", "lazy"}));
  bench->add_option("--out", out_path, "CSV path (default stdout); fits go to <stem>.fits.csv");

  auto* compact = app.add_subcommand("compact", "Relabel nodes densely by first appearance");
  compact->add_option("file", file, "Edge-list file")->required();
  compact->add_option("--out", out_path, "Compacted network path (default stdout)");
  compact->add_option("--map-out", map_path, "Write 'compact original' mapping lines here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitStatus::ok : ExitStatus::input_error;
  }

  try {
    if (check->parsed()) return cmd_check(file, algo, verify, out, err);
    if (partitions->parsed()) return cmd_partitions(file, algo, out_path, out);
    if (stats->parsed()) return cmd_stats(file, out);
    if (generate->parsed()) {
      gen.c_target = Rational::parse(gen_cavg);
      return cmd_generate(gen, out_path, out);
    }
    if (bench->parsed()) {
      sweep.variable = parse_sweep_variable(sweep_name);
      sweep.c_avg = Rational::parse(sweep_cavg);
      sweep.include_prep = include_prep;
      sweep.segment_variant = variant == "lazy" ? RemovalVariant::lazy : RemovalVariant::direct;
      return cmd_bench(sweep, sweep_values, out_path, out, err);
    }
    if (compact->parsed()) return cmd_compact(file, out_path, map_path, out);
  } catch (const FeasibilityError& e) {
    err << "error: infeasible configuration: " << e.what() << '\n';
    return ExitStatus::infeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitStatus::input_error;
  }
  return ExitStatus::input_error;
}

}  // namespace netconn::cli
