#include "apsp/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "apsp/errors.hpp"

namespace apsp {

std::size_t ceil_log2(std::size_t x) noexcept {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

std::size_t default_max_epochs(std::size_t n) noexcept {
  return n <= 1 ? 1 : ceil_log2(n - 1) + 1;
}

EpochStats epoch_stats(std::size_t epoch, Dist max_element, std::size_t finite_before,
                       std::size_t finite_after) {
  EpochStats s;
  s.epoch = epoch;
  s.max_element = max_element;
  s.finite_before = finite_before;
  s.finite_after = finite_after;
  if (finite_after < finite_before)
    throw InvariantError("epoch " + std::to_string(epoch) + " lost reachable pairs");
  s.delta = finite_after - finite_before;
  return s;
}

EpochStats epoch_stats(const DistMatrix& before, const DistMatrix& after, std::size_t epoch) {
  if (before.n() != after.n()) throw DimensionError("epoch matrices differ in size");
  return epoch_stats(epoch, max_finite(after), finite_count(before), finite_count(after));
}

void finalize_epoch_stats(std::span<EpochStats> epochs, std::size_t unreachable, std::size_t n) {
  const double total = static_cast<double>(n) * static_cast<double>(n);
  for (EpochStats& s : epochs) {
    s.convergence_quantity = s.finite_after + unreachable;
    s.convergence_pct = 100.0 * static_cast<double>(s.convergence_quantity) / total;
  }
}

bool converged(const DistMatrix& before, const DistMatrix& after) {
  if (before.n() != after.n()) throw DimensionError("convergence check on matrices of different size");
  return before == after;
}

ProductOutcome distance_product_traced(const DistMatrix& l, const SolveOptions& opts) {
  opts.kernel.validate();
  const EncodeParams params = make_encode_params(l, opts.width);
  const KernelKind kind = opts.kernel.force.value_or(choose_kernel(density(l), opts.kernel));

  EncodedMatrix product;
  if (kind == KernelKind::kSparse) {
    const CsrMatrix a = to_csr(encode(l, params, opts.enforce_precision));
    product = from_csr(multiply_sparse(a, a));
  } else {
    const EncodedMatrix a = encode(l, params, opts.enforce_precision);
    if (kind == KernelKind::kDenseBlocked && l.symmetric())
      product = square_dense_blocked_symmetric(a, opts.kernel.block);
    else
      product = multiply(kind, a, a, opts.kernel);
  }
  return {decode(product, params), kind};
}

DistMatrix distance_product(const DistMatrix& l, const SolveOptions& opts) {
  return distance_product_traced(l, opts).result;
}

DistMatrix min_plus_product(const DistMatrix& a, const DistMatrix& b) {
  if (a.n() != b.n()) throw DimensionError("min-plus operands differ in size");
  const std::size_t n = a.n();
  std::vector<Dist> c(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Dist aik = a.at(i, k);
      if (aik == kInf) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        if (brow[j] == kInf) continue;
        const std::uint64_t s = std::uint64_t{aik} + brow[j];
        if (s < c[i * n + j]) c[i * n + j] = static_cast<Dist>(s);
      }
    }
  return DistMatrix(n, std::move(c));
}

namespace {

void finish(SolveResult& r) {
  const std::size_t n = r.distances.n();
  finalize_epoch_stats(r.epochs, n * n - finite_count(r.distances), n);
}

std::size_t doubled(std::size_t m) noexcept {
  return m > (std::numeric_limits<std::size_t>::max() >> 1) ? std::numeric_limits<std::size_t>::max()
                                                           : m * 2;
}

}  // namespace

SolveResult power_law_bound(const DistMatrix& w, const SolveOptions& opts) {
  const std::size_t n = w.n();
  const std::size_t cap = opts.max_epochs.value_or(default_max_epochs(n));
  if (cap < 1) throw InvariantError("max_epochs must be >= 1");

  SolveResult r;
  r.distances = w;
  std::size_t hops = 1;  // current matrix holds shortest paths of <= hops edges
  bool fixed_point = false;
  bool hint_stop = false;

  for (std::size_t epoch = 1; epoch <= cap; ++epoch) {
    if (opts.trust_diameter && opts.diameter_hint && hops >= *opts.diameter_hint) {
      hint_stop = true;
      break;
    }
    ProductOutcome next = distance_product_traced(r.distances, opts);
    r.epochs.push_back(epoch_stats(r.distances, next.result, epoch));
    r.kernel_trace.push_back(next.kernel);
    if (converged(r.distances, next.result)) {
      fixed_point = true;
      break;
    }
    r.distances = std::move(next.result);
    hops = doubled(hops);
  }

  if (fixed_point) {
    r.stop = StopReason::kFixedPoint;
  } else if (n <= 1 || hops >= n - 1) {
    r.stop = StopReason::kHopBound;
  } else if (hint_stop) {
    r.stop = StopReason::kDiameterHint;
  } else {
    r.stop = StopReason::kEpochCap;
  }
  r.converged = r.stop == StopReason::kFixedPoint || r.stop == StopReason::kHopBound;
  finish(r);
  return r;
}

SolveResult repeated_squaring_fixed(const DistMatrix& w, const SolveOptions& opts) {
  const std::size_t n = w.n();
  const std::size_t rounds = n <= 1 ? 0 : ceil_log2(n - 1);
  SolveResult r;
  r.distances = w;
  for (std::size_t epoch = 1; epoch <= rounds; ++epoch) {
    ProductOutcome next = distance_product_traced(r.distances, opts);
    r.epochs.push_back(epoch_stats(r.distances, next.result, epoch));
    r.kernel_trace.push_back(next.kernel);
    r.distances = std::move(next.result);
  }
  r.stop = StopReason::kHopBound;
  r.converged = true;
  finish(r);
  return r;
}

DistMatrix floyd_warshall(const DistMatrix& w) {
  const std::size_t n = w.n();
  std::vector<Dist> d(w.entries().begin(), w.entries().end());
  for (std::size_t k = 0; k < n; ++k) {
    const Dist* dk = d.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const Dist dik = d[i * n + k];
      if (dik == kInf) continue;
      Dist* di = d.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        if (dk[j] == kInf) continue;
        const std::uint64_t s = std::uint64_t{dik} + dk[j];
        if (s < di[j]) di[j] = static_cast<Dist>(s);
      }
    }
  }
  return DistMatrix(n, std::move(d));
}

}  // namespace apsp
