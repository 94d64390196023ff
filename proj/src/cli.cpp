#include "apsp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "apsp/codec.hpp"
#include "apsp/errors.hpp"
#include "apsp/graph.hpp"
#include "apsp/io.hpp"
#include "apsp/kernels.hpp"
#include "apsp/netgen.hpp"
#include "apsp/solver.hpp"

namespace apsp::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string read_input(const std::string& path) {
  if (path.empty()) throw InvariantError("an input edge list is required (--input)");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvariantError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::ofstream open_output(const std::string& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
  if (!f) throw InvariantError("cannot open output file " + path);
  return f;
}

FloatWidth to_width(int w) { return w == 32 ? FloatWidth::k32 : FloatWidth::k64; }

KernelChoice kernel_choice(const RunConfig& cfg) {
  KernelChoice c;
  c.block = cfg.block;
  if (cfg.sparse_threshold) c.threshold = *cfg.sparse_threshold;
  if (cfg.kernel != "auto") c.force = parse_kernel_name(cfg.kernel);
  return c;
}

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions o;
  o.width = to_width(cfg.width);
  o.kernel = kernel_choice(cfg);
  o.max_epochs = cfg.max_epochs;
  o.diameter_hint = cfg.diameter;
  o.trust_diameter = cfg.trust_diameter;
  o.enforce_precision = !cfg.no_enforce_precision;
  return o;
}

std::string_view stop_name(StopReason s) {
  switch (s) {
    case StopReason::kFixedPoint: return "fixed_point";
    case StopReason::kHopBound: return "hop_bound";
    case StopReason::kDiameterHint: return "diameter_hint";
    case StopReason::kEpochCap: return "epoch_cap";
  }
  return "unknown";
}

std::string kernel_list(const std::vector<KernelKind>& trace) {
  std::string s;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) s += ',';
    s += kernel_name(trace[i]);
  }
  return s.empty() ? "-" : s;
}

Graph load_graph(const RunConfig& cfg) {
  Graph g = parse_edge_list(read_input(cfg.input), cfg.directed);
  if (cfg.remap) return compact_node_ids(g).graph;
  return g;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.width != 32 && cfg.width != 64) throw InvariantError("--width must be 32 or 64");
  if (cfg.block < 1) throw InvariantError("--block must be >= 1");
  if (cfg.kernel != "auto" && !parse_kernel_name(cfg.kernel))
    throw InvariantError("unknown --kernel " + cfg.kernel);
  if (cfg.kernel != "auto" && cfg.sparse_threshold)
    throw InvariantError("--sparse-threshold only applies to --kernel auto");
  if (cfg.sparse_threshold && !(*cfg.sparse_threshold > 0.0 && *cfg.sparse_threshold < 1.0))
    throw InvariantError("--sparse-threshold must lie in (0, 1)");
  if (cfg.format != "csv" && cfg.format != "bin") throw InvariantError("--format must be csv or bin");
  if (cfg.format == "bin" && cfg.output.empty())
    throw InvariantError("--format bin needs --output");
  if (cfg.trust_diameter && !cfg.diameter) throw InvariantError("--trust-diameter needs --diameter");
  if (cfg.max_epochs && *cfg.max_epochs < 1) throw InvariantError("--max-epochs must be >= 1");
  if (cfg.n && !(*cfg.n >= 1.0)) throw InvariantError("--n must be >= 1");
  if (cfg.timeout_seconds < 0.0) throw InvariantError("--timeout must be >= 0");
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg);
  const DistMatrix w = to_distance_matrix(g);
  const SolveOptions opts = solve_options(cfg);

  const auto t0 = Clock::now();
  SolveResult result;
  try {
    result = power_law_bound(w, opts);
  } catch (const FeasibilityError& e) {
    err << "error: infeasible encoding: " << e.what() << '\n';
    return kNumeric;
  } catch (const DecodeError& e) {
    err << "error: decode failed: " << e.what() << '\n';
    return kNumeric;
  }
  const double wall = seconds_since(t0);

  if (cfg.output.empty()) {
    write_distance_csv(out, result.distances);
  } else if (cfg.format == "bin") {
    auto f = open_output(cfg.output, true);
    write_distance_binary(f, result.distances, opts.width);
  } else {
    auto f = open_output(cfg.output);
    write_distance_csv(f, result.distances);
  }

  if (cfg.stats.empty()) {
    write_epoch_stats_csv(out, result.epochs);
  } else {
    auto f = open_output(cfg.stats);
    write_epoch_stats_csv(f, result.epochs);
  }
  if (!cfg.heatmap.empty()) {
    auto f = open_output(cfg.heatmap, true);
    write_heatmap_pgm(f, result.distances);
  }

  out << "n=" << w.n() << " epochs=" << result.epochs.size()
      << " converged=" << (result.converged ? "yes" : "no") << " stop=" << stop_name(result.stop)
      << " kernels=" << kernel_list(result.kernel_trace) << " wall_seconds=" << fixed(wall, 6) << '\n';

  int code = kOk;
  if (cfg.oracle) {
    const bool match = floyd_warshall(w) == result.distances;
    out << "oracle: " << (match ? "MATCH" : "MISMATCH") << '\n';
    if (!match) code = kMismatch;
  }
  if (result.stop == StopReason::kEpochCap) {
    err << "error: no fixed point after " << result.epochs.size()
        << " epochs; partial result written\n";
    if (code == kOk) code = kNotConverged;
  }
  return code;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Graph g = cfg.input.empty()
                ? generate_scale_free({static_cast<std::size_t>(cfg.n.value_or(512)), cfg.m_attach, cfg.seed})
                : load_graph(cfg);
  const DistMatrix w = to_distance_matrix(g);
  const std::size_t n = w.n();
  SolveOptions base = solve_options(cfg);

  std::ostringstream table;
  table << "algorithm,kernel,n,iterations,seconds,status\n";

  auto status_of = [&](double secs, bool ok) -> std::string {
    if (!ok) return "mismatch";
    if (cfg.timeout_seconds > 0.0 && secs > cfg.timeout_seconds) return "timeout";
    return "ok";
  };

  auto t0 = Clock::now();
  const DistMatrix reference = floyd_warshall(w);
  double secs = seconds_since(t0);
  table << "floyd_warshall,-," << n << ",-," << fixed(secs, 6) << ',' << status_of(secs, true) << '\n';

  auto run_cell = [&](const std::string& algo, const std::string& kname, auto&& fn) {
    SolveOptions o = base;
    o.kernel.force = kname == "auto" ? std::nullopt : parse_kernel_name(kname);
    try {
      const auto start = Clock::now();
      const SolveResult r = fn(o);
      const double s = seconds_since(start);
      table << algo << ',' << kname << ',' << n << ',' << r.epochs.size() << ',' << fixed(s, 6) << ','
            << status_of(s, r.distances == reference) << '\n';
    } catch (const Error& e) {
      err << algo << '/' << kname << ": " << e.what() << '\n';
      table << algo << ',' << kname << ',' << n << ",-,-,error\n";
    }
  };

  std::vector<std::string> kernels;
  if (cfg.kernel == "auto")
    kernels = {"naive", "blocked", "strassen", "sparse", "auto"};
  else
    kernels = {cfg.kernel};

  run_cell("alon_n", cfg.kernel, [&](const SolveOptions& o) { return repeated_squaring_fixed(w, o); });
  for (const auto& k : kernels)
    run_cell("power_law_bound", k, [&](const SolveOptions& o) { return power_law_bound(w, o); });

  if (cfg.output.empty()) {
    out << table.str();
  } else {
    auto f = open_output(cfg.output);
    f << table.str();
  }
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (!cfg.n) throw InvariantError("check needs --n");
  const double n = *cfg.n;
  const double est = estimate_diameter(n);
  out << "n=" << fixed(n, 0) << '\n';
  out << "estimate_diameter=" << fixed(est, 3) << '\n';
  for (FloatWidth w : {FloatWidth::k32, FloatWidth::k64}) {
    const PrecisionLimits l = precision_limits(n, w);
    out << "width=" << static_cast<int>(w) << " emax=" << fixed(l.emax, 1)
        << " nominal_limit=" << fixed(l.nominal_limit, 1) << " safe_limit=" << fixed(l.safe_limit, 1)
        << '\n';
  }
  const double d = cfg.diameter ? static_cast<double>(*cfg.diameter) : est;
  const PrecisionLimits l = precision_limits(n, to_width(cfg.width));
  out << "verdict width=" << cfg.width << " diameter=" << fixed(d, 3) << ": "
      << (d <= l.safe_limit ? "FEASIBLE" : "INFEASIBLE") << '\n';
  return kOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n) throw InvariantError("gen needs --n");
  const Graph g = generate_scale_free({static_cast<std::size_t>(*cfg.n), cfg.m_attach, cfg.seed});
  std::ostream* summary = &out;
  if (cfg.output.empty()) {
    out << format_edge_list(g);
    summary = &err;
  } else {
    auto f = open_output(cfg.output);
    f << format_edge_list(g);
  }
  *summary << "n=" << g.n() << " edges=" << g.edges().size() << '\n';
  if (cfg.solve_after_gen) {
    const SolveResult r = power_law_bound(to_distance_matrix(g), solve_options(cfg));
    const DiameterInfo d = diameter(r.distances);
    const double est = estimate_diameter(static_cast<double>(g.n()));
    *summary << "diameter=" << d.max_finite << " estimate=" << fixed(est, 3)
             << " band=" << fixed(2 * est, 3)
             << " within_band=" << (d.max_finite <= 2 * est ? "yes" : "no")
             << " epochs=" << r.epochs.size() << '\n';
  }
  return kOk;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"All-pairs shortest paths via exponentially encoded matrix products", "apsp"};
  app.require_subcommand(1);

  auto add_kernel_flags = [&](CLI::App* sub) {
    sub->add_option("--width", cfg.width, "Float width of the encoding (32 or 64)");
    sub->add_option("--block", cfg.block, "Dense tile edge");
    sub->add_option("--sparse-threshold", cfg.sparse_threshold, "Density below which the sparse kernel runs");
    sub->add_option("--kernel", cfg.kernel, "auto, naive, blocked, strassen or sparse");
    sub->add_option("--diameter", cfg.diameter, "Known hop diameter");
    sub->add_flag("--trust-diameter", cfg.trust_diameter, "Stop at the diameter without a confirming epoch");
    sub->add_flag("--no-enforce-precision", cfg.no_enforce_precision,
                  "Encode even when the product may overflow");
    sub->add_option("--max-epochs", cfg.max_epochs, "Epoch cap");
  };

  auto* solve = app.add_subcommand("solve", "Solve all-pairs shortest paths for an edge list");
  solve->add_option("input,--input", cfg.input, "Edge list path, - for stdin");
  solve->add_option("--output,-o", cfg.output, "Distance matrix output path");
  solve->add_option("--format", cfg.format, "csv or bin");
  solve->add_option("--stats", cfg.stats, "Epoch statistics CSV path");
  solve->add_option("--heatmap", cfg.heatmap, "Grayscale PGM of the distance matrix");
  solve->add_flag("--oracle", cfg.oracle, "Cross-check against Floyd-Warshall");
  solve->add_flag("--directed", cfg.directed, "Treat edges as directed");
  solve->add_flag("--remap", cfg.remap, "Renumber node ids densely, dropping unused ids");
  add_kernel_flags(solve);

  auto* bench = app.add_subcommand("bench", "Time Floyd-Warshall, fixed squaring and the convergent solver");
  bench->add_option("--input", cfg.input, "Edge list (default: generated graph)");
  bench->add_option("--n", cfg.n, "Generated node count (default 512)");
  bench->add_option("--m", cfg.m_attach, "Generated edges per new node");
  bench->add_option("--seed", cfg.seed, "Generator seed");
  bench->add_option("--output,-o", cfg.output, "CSV output path");
  bench->add_option("--timeout", cfg.timeout_seconds, "Flag cells slower than this many seconds");
  bench->add_flag("--directed", cfg.directed, "Treat input edges as directed");
  add_kernel_flags(bench);

  auto* check = app.add_subcommand("check", "Print precision limits for a node count");
  check->add_option("--n", cfg.n, "Node count")->required();
  check->add_option("--width", cfg.width, "Width used for the verdict");
  check->add_option("--diameter", cfg.diameter, "Diameter to judge (default: estimate)");

  auto* gen = app.add_subcommand("gen", "Generate a scale-free edge list");
  gen->add_option("--n", cfg.n, "Node count")->required();
  gen->add_option("--m", cfg.m_attach, "Edges per new node");
  gen->add_option("--seed", cfg.seed, "Generator seed");
  gen->add_option("--output,-o", cfg.output, "Edge list output path");
  gen->add_flag("--solve", cfg.solve_after_gen, "Solve and report the measured diameter");

  std::vector<const char*> args;
  args.reserve(argv.size());
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) cfg.subcommand = "solve";
    if (bench->parsed()) cfg.subcommand = "bench";
    if (check->parsed()) cfg.subcommand = "check";
    if (gen->parsed()) cfg.subcommand = "gen";
    validate(cfg);
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out, err);
    if (cfg.subcommand == "bench") return cmd_bench(cfg, out, err);
    if (cfg.subcommand == "check") return cmd_check(cfg, out, err);
    return cmd_gen(cfg, out, err);
  } catch (const FeasibilityError& e) {
    err << "error: infeasible encoding: " << e.what() << '\n';
    return kNumeric;
  } catch (const DecodeError& e) {
    err << "error: decode failed: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace apsp::cli
