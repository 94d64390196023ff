#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace apsp::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,        // --oracle disagreed
  kUsage = 2,           // bad flags or unreadable/malformed input
  kNumeric = 3,         // feasibility refusal or decode failure
  kNotConverged = 4,    // epoch cap reached without a proof of convergence
};

struct RunConfig {
  std::string subcommand;
  std::string input;   // edge list path, "-" for stdin
  std::string output;  // empty: stdout where the command allows it
  int width = 64;
  std::optional<double> sparse_threshold;
  std::size_t block = 64;
  std::string kernel = "auto";
  std::optional<std::size_t> diameter;
  bool trust_diameter = false;
  bool oracle = false;
  bool no_enforce_precision = false;
  std::optional<std::size_t> max_epochs;
  bool directed = false;
  bool remap = false;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string heatmap;
  std::string stats;
  // gen / bench / check
  std::optional<double> n;
  std::size_t m_attach = 3;
  bool solve_after_gen = false;
  double timeout_seconds = 0.0;  // bench: cells slower than this are flagged
};

/// Throws apsp::InvariantError on inconsistent flags.
void validate(const RunConfig& cfg);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace apsp::cli
