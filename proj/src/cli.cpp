#include "monopolar/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "monopolar/exact.hpp"
#include "monopolar/fpt.hpp"
#include "monopolar/generate.hpp"
#include "monopolar/oracle.hpp"

namespace monopolar::cli {

namespace {

// Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct Source {
  std::istream& stdin_stream;

  std::string read(const std::string& path) const {
    if (path == "-") {
      std::ostringstream buffer;
      buffer << stdin_stream.rdbuf();
      return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
};

Graph read_graph(const Source& src, const std::string& path) {
  try {
    return parse_graph(src.read(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Labeling read_labeling(const Source& src, const std::string& path, int n, bool allow_both) {
  if (path.empty()) return Labeling(n);
  try {
    return parse_labeling(src.read(path), n, allow_both);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const std::vector<std::string> kStrategies{"exact", "fpt-vertex", "fpt-edge", "oracle", "mis"};

SolveResult oracle_result(const Graph& g, const Labeling& labels) {
  oracle::Report report = oracle::brute_force_extension(g, labels);
  SolveResult result;
  result.stats.nodes = result.stats.leaves = static_cast<std::int64_t>(report.examined);
  result.stats.initial_measure = labels.count(Side::Undecided);
  if (report.yes) result.partition = std::move(report.witnesses.front());
  return result;
}

SolveResult recognize(const std::string& strategy, const Graph& g, const SolverOptions& opts) {
  if (strategy == "exact") return recognize_exact(g, opts);
  if (strategy == "fpt-vertex") return recognize_fpt(g, ModulatorKind::Vertex, opts);
  if (strategy == "fpt-edge") return recognize_fpt(g, ModulatorKind::Edge, opts);
  if (strategy == "oracle") return oracle_result(g, Labeling(g.size()));
  SolveResult result = oracle::mis_recognize(g);
  result.stats.initial_measure = g.size();
  return result;
}

// Constrained commands support only strategies that take a labelling.
SolveResult extend(const std::string& strategy, const Graph& g, const Labeling& labels, const SolverOptions& opts) {
  if (strategy == "exact") return me_branch(g, labels, opts);
  if (strategy == "oracle") return oracle_result(g, labels);
  throw UsageError("strategy '" + strategy + "' does not accept constraints; use exact or oracle");
}

void print_stats(std::ostream& err, const SolveStats& s) {
  err << "nodes " << s.nodes << "\n"
      << "leaves " << s.leaves << "\n"
      << "max_depth " << s.max_depth << "\n"
      << "measure " << s.initial_measure << "\n"
      << "bound " << leaf_bound(s.initial_measure) << "\n"
      << "modulator " << s.modulator_size << "\n"
      << "assignments " << s.assignments << "\n"
      << "use_2sat_calls " << s.use_2sat_calls << "\n"
      << "p3_deletions " << s.p3_deletions << "\n";
}

struct SolveFlags {
  std::string strategy = "exact";
  bool verify = false;
  bool stats = false;
  bool debug_checks = false;
};

int report(const SolveFlags& flags, const Graph& g, const Labeling& constraints, const SolveResult& result,
           std::ostream& out, std::ostream& err) {
  if (flags.verify && result.partition && !verify_partition(g, *result.partition, constraints)) {
    err << "error: solver returned a partition that fails verification\n";
    return kUsage;
  }
  out << format_partition(result.partition);
  if (flags.stats) print_stats(err, result.stats);
  return result.yes() ? kYes : kNo;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& flags) {
  cmd->add_option("--strategy", flags.strategy, "solver")->check(CLI::IsMember(kStrategies));
  cmd->add_flag("--verify", flags.verify, "re-check the partition before printing");
  cmd->add_flag("--stats", flags.stats, "print search statistics to stderr");
  cmd->add_flag("--debug-checks", flags.debug_checks, "enable internal invariant checks");
}

struct BenchRow {
  std::string text;
  bool failed = false;
};

BenchRow bench_one(const Source& src, const std::string& path, const std::string& strategy) {
  BenchRow row;
  char line[256];
  try {
    const Graph g = read_graph(src, path);
    const auto start = std::chrono::steady_clock::now();
    const SolveResult r = recognize(strategy, g, {});
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::snprintf(line, sizeof line, "%d\t%d\t%d\t%lld\t%lld\t%lld\t%.3f\t%s", g.size(), g.edge_count(),
                  r.stats.initial_measure, static_cast<long long>(r.stats.nodes),
                  static_cast<long long>(r.stats.leaves), static_cast<long long>(leaf_bound(r.stats.initial_measure)),
                  ms, r.yes() ? "YES" : "NO");
    row.text = path + "\t" + line;
  } catch (const std::exception& e) {
    row.text = path + "\terror: " + e.what();
    row.failed = true;
  }
  return row;
}

int bench(const Source& src, const std::vector<std::string>& files, const std::string& strategy, int jobs,
          std::ostream& out) {
  if (std::count(files.begin(), files.end(), "-") > 1) throw UsageError("standard input may be used only once");
  std::vector<BenchRow> rows(files.size());
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < files.size();) rows[i] = bench_one(src, files[i], strategy);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  if (threads == 1) {
    work();
  } else {
    for (int t = 0; t < threads; ++t) workers.emplace_back(work);
    for (auto& w : workers) w.join();
  }
  out << "file\tn\tm\tmu0\tnodes\tleaves\tbound\ttime_ms\tanswer\n";
  bool failed = false;
  for (const auto& row : rows) {
    out << row.text << "\n";
    failed = failed || row.failed;
  }
  return failed ? kUsage : kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monopolar graph recognition and extension", "monopolar"};
  app.require_subcommand(1);
  const Source src{in};

  SolveFlags flags;
  std::string graph_path, constraint_path, partition_path;

  auto* rec = app.add_subcommand("recognize", "decide whether a graph is monopolar");
  rec->add_option("graph", graph_path, "graph file or -")->required();
  add_solve_flags(rec, flags);

  auto* ext = app.add_subcommand("extend", "monopolar extension of C/I constraints");
  ext->add_option("graph", graph_path, "graph file or -")->required();
  ext->add_option("--constraints", constraint_path, "lines 'v C' or 'v I'")->required();
  add_solve_flags(ext, flags);

  auto* lmp = app.add_subcommand("lmp", "list monopolar partition");
  lmp->add_option("graph", graph_path, "graph file or -")->required();
  lmp->add_option("--constraints", constraint_path, "lines 'v C', 'v I' or 'v CI'")->required();
  add_solve_flags(lmp, flags);

  std::string kind = "vertex";
  auto* mod = app.add_subcommand("modulator", "minimum claw-free modulator");
  mod->add_option("graph", graph_path, "graph file or -")->required();
  mod->add_option("--kind", kind, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));

  auto* ver = app.add_subcommand("verify", "check a partition certificate");
  ver->add_option("graph", graph_path, "graph file or -")->required();
  ver->add_option("partition", partition_path, "partition file or -")->required();
  ver->add_option("--constraints", constraint_path, "lines 'v C' or 'v I'");

  std::string gen_kind;
  std::vector<std::string> gen_params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("kind", gen_kind, "gnp, planted, linegraph or chairpath")->required();
  gen->add_option("params", gen_params, "numeric parameters of the kind");
  gen->add_option("--seed", seed, "64-bit seed");

  std::vector<std::string> bench_files;
  int jobs = 1;
  auto* ben = app.add_subcommand("bench", "solve files and print a statistics table");
  ben->add_option("files", bench_files, "graph files")->required();
  ben->add_option("--strategy", flags.strategy, "solver")->check(CLI::IsMember(kStrategies));
  ben->add_option("--jobs", jobs, "parallel instances")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    SolverOptions opts;
    opts.debug_checks = flags.debug_checks;

    if (rec->parsed()) {
      const Graph g = read_graph(src, graph_path);
      return report(flags, g, Labeling(g.size()), recognize(flags.strategy, g, opts), out, err);
    }
    if (ext->parsed()) {
      const Graph g = read_graph(src, graph_path);
      const Labeling labels = read_labeling(src, constraint_path, g.size(), false);
      return report(flags, g, labels, extend(flags.strategy, g, labels, opts), out, err);
    }
    if (lmp->parsed()) {
      const Graph g = read_graph(src, graph_path);
      const Labeling labels = read_labeling(src, constraint_path, g.size(), true);
      SolveResult r = flags.strategy == "exact" ? solve_list_partition(g, labeling_to_lists(labels), opts)
                                                : extend(flags.strategy, g, labels, opts);
      return report(flags, g, labels, r, out, err);
    }
    if (mod->parsed()) {
      const Graph g = read_graph(src, graph_path);
      const ModulatorResult m = min_modulator(g, kind == "vertex" ? ModulatorKind::Vertex : ModulatorKind::Edge);
      out << "SIZE " << m.size << "\n";
      if (m.kind == ModulatorKind::Vertex) {
        out << "V";
        for (Vertex v : m.vertices) out << " " << v;
        out << "\n";
      } else {
        for (const Edge& e : m.edges) out << "E " << e.u << " " << e.v << "\n";
      }
      return kYes;
    }
    if (ver->parsed()) {
      if (graph_path == "-" && partition_path == "-") throw UsageError("standard input may be used only once");
      const Graph g = read_graph(src, graph_path);
      const Labeling labels = read_labeling(src, constraint_path, g.size(), false);
      std::optional<MonopolarPartition> p;
      try {
        p = parse_partition(src.read(partition_path), g.size());
      } catch (const ParseError& e) {
        throw UsageError(partition_path + ": " + e.what());
      }
      const bool ok = p && verify_partition(g, *p, labels);
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? kYes : kNo;
    }
    if (gen->parsed()) {
      out << to_text(generate(gen_kind, gen_params, seed));
      return kYes;
    }
    return bench(src, bench_files, flags.strategy, jobs, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const oracle::Refusal& e) {
    err << "error: oracle refused: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace monopolar::cli
