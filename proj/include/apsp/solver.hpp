#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apsp/codec.hpp"
#include "apsp/graph.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

struct SolveOptions {
  FloatWidth width = FloatWidth::k64;
  KernelChoice kernel;
  /// Epoch cap; defaults to default_max_epochs(n).
  std::optional<std::size_t> max_epochs;
  /// Known (upper bound on the) hop diameter D. Only shortens the run when
  /// trust_diameter is set; otherwise a confirming epoch is still required.
  std::optional<std::size_t> diameter_hint;
  bool trust_diameter = false;
  /// Refuse to encode when the product could overflow the float width.
  bool enforce_precision = true;
};

/// ceil(log2(n - 1)) squarings cover every simple path, plus one epoch to
/// observe the fixed point. At least 1.
std::size_t default_max_epochs(std::size_t n) noexcept;

/// ceil(log2(x)) for x >= 1, 0 for x <= 1.
std::size_t ceil_log2(std::size_t x) noexcept;

/// One row of the per-epoch table. The convergence columns are filled by
/// finalize_epoch_stats once the final unreachable count is known.
struct EpochStats {
  std::size_t epoch = 0;  // 1-based
  Dist max_element = 0;
  std::size_t finite_before = 0;
  std::size_t finite_after = 0;
  std::size_t delta = 0;
  std::size_t convergence_quantity = 0;  // finite_after + unreachable
  double convergence_pct = 0.0;          // 100 * convergence_quantity / n^2
};

EpochStats epoch_stats(std::size_t epoch, Dist max_element, std::size_t finite_before,
                       std::size_t finite_after);
EpochStats epoch_stats(const DistMatrix& before, const DistMatrix& after, std::size_t epoch);

/// Back-fills convergence_quantity and convergence_pct.
void finalize_epoch_stats(std::span<EpochStats> epochs, std::size_t unreachable, std::size_t n);

enum class StopReason {
  kFixedPoint,     // an epoch left the matrix unchanged
  kHopBound,       // 2^epochs >= n - 1, so every simple path is covered
  kDiameterHint,   // trusted hint reached without confirmation
  kEpochCap,       // max_epochs exhausted without either proof
};

struct SolveResult {
  DistMatrix distances;
  std::vector<EpochStats> epochs;
  std::vector<KernelKind> kernel_trace;
  bool converged = false;  // kFixedPoint or kHopBound
  StopReason stop = StopReason::kEpochCap;
};

/// Exact (min, +) square of l via encode, multiply, decode. The kernel is
/// chosen from the density of l unless opts.kernel.force is set.
struct ProductOutcome {
  DistMatrix result;
  KernelKind kernel;
};
ProductOutcome distance_product_traced(const DistMatrix& l, const SolveOptions& opts);
DistMatrix distance_product(const DistMatrix& l, const SolveOptions& opts);

/// Direct (min, +) product, no encoding. Test and bench reference.
DistMatrix min_plus_product(const DistMatrix& a, const DistMatrix& b);

/// Entrywise equality; throws DimensionError on a size mismatch.
bool converged(const DistMatrix& before, const DistMatrix& after);

/// Repeated squaring L, L^2, L^4, ... with density-based kernel routing,
/// stopping at the first epoch whose output equals its input.
SolveResult power_law_bound(const DistMatrix& w, const SolveOptions& opts = {});

/// Baseline without the convergence test: exactly ceil(log2(n - 1))
/// squarings.
SolveResult repeated_squaring_fixed(const DistMatrix& w, const SolveOptions& opts = {});

DistMatrix floyd_warshall(const DistMatrix& w);

}  // namespace apsp
