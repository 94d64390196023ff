#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

std::string_view kernel_name(KernelKind k) noexcept {
  switch (k) {
    case KernelKind::kNaive: return "naive";
    case KernelKind::kDenseBlocked: return "blocked";
    case KernelKind::kStrassen: return "strassen";
    case KernelKind::kSparse: return "sparse";
  }
  return "unknown";
}

std::optional<KernelKind> parse_kernel_name(std::string_view s) noexcept {
  for (auto k : {KernelKind::kNaive, KernelKind::kDenseBlocked, KernelKind::kStrassen,
                 KernelKind::kSparse})
    if (kernel_name(k) == s) return k;
  return std::nullopt;
}

void KernelChoice::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw InvariantError("sparse threshold must lie in (0, 1)");
  if (block < 1) throw InvariantError("block size must be >= 1");
  if (strassen_cutoff < 1) throw InvariantError("strassen cutoff must be >= 1");
}

KernelKind choose_kernel(const DensityReport& d, const KernelChoice& c) {
  return d.density < c.threshold ? KernelKind::kSparse : KernelKind::kDenseBlocked;
}

namespace {

void check_operands(const EncodedMatrix& a, const EncodedMatrix& b) {
  if (a.n() != b.n())
    throw DimensionError("operand dimensions differ: " + std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()));
  if (a.width() != b.width()) throw DimensionError("operand float widths differ");
}

void narrow_all(EncodedMatrix& m) {
  if (m.width() == FloatWidth::k64) return;
  for (double& v : m.values()) v = narrow(v, m.width());
}

// Register tile: kMr rows by kNr = kLanes * kVecs columns.
constexpr std::size_t kLanes = 8;
constexpr std::size_t kVecs = 3;
constexpr std::size_t kMr = 8;
constexpr std::size_t kNr = kLanes * kVecs;

using Vec = double __attribute__((vector_size(kLanes * sizeof(double))));

inline Vec load(const double* p) {
  Vec v;
  std::memcpy(&v, p, sizeof v);
  return v;
}

inline void store(double* p, Vec v) { std::memcpy(p, &v, sizeof v); }

// c[0:rows, 0:cols] += pa * pb, pa packed k-major as kc x kMr, pb as kc x kNr.
void micro_kernel(std::size_t kc, const double* pa, const double* pb, double* c, std::size_t ldc,
                  std::size_t rows, std::size_t cols) {
  Vec acc[kMr][kVecs] = {};
  for (std::size_t k = 0; k < kc; ++k) {
    const Vec b0 = load(pb);
    const Vec b1 = load(pb + kLanes);
    const Vec b2 = load(pb + 2 * kLanes);
#pragma GCC unroll 8
    for (std::size_t r = 0; r < kMr; ++r) {
      const double av = pa[r];
      acc[r][0] += av * b0;
      acc[r][1] += av * b1;
      acc[r][2] += av * b2;
    }
    pa += kMr;
    pb += kNr;
  }
  if (rows == kMr && cols == kNr) {
    for (std::size_t r = 0; r < kMr; ++r)
      for (std::size_t v = 0; v < kVecs; ++v) {
        double* dst = c + r * ldc + v * kLanes;
        store(dst, load(dst) + acc[r][v]);
      }
    return;
  }
  alignas(64) double tile[kMr][kNr];
  for (std::size_t r = 0; r < kMr; ++r)
    for (std::size_t v = 0; v < kVecs; ++v) store(&tile[r][v * kLanes], acc[r][v]);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < cols; ++j) c[r * ldc + j] += tile[r][j];
}

// Rows [row0, row0 + mb) by columns [col0, col0 + kb) of a, as kMr-row panels.
void pack_a(const double* a, std::size_t n, std::size_t row0, std::size_t mb, std::size_t col0,
            std::size_t kb, double* out) {
  for (std::size_t p = 0; p < mb; p += kMr) {
    const std::size_t rows = std::min(kMr, mb - p);
    for (std::size_t k = 0; k < kb; ++k) {
      for (std::size_t r = 0; r < rows; ++r) out[r] = a[(row0 + p + r) * n + col0 + k];
      for (std::size_t r = rows; r < kMr; ++r) out[r] = 0.0;
      out += kMr;
    }
  }
}

// Rows [row0, row0 + kb) of b, all n columns, as kNr-column panels.
void pack_b(const double* b, std::size_t n, std::size_t row0, std::size_t kb, double* out) {
  for (std::size_t p = 0; p < n; p += kNr) {
    const std::size_t cols = std::min(kNr, n - p);
    for (std::size_t k = 0; k < kb; ++k) {
      const double* src = b + (row0 + k) * n + p;
      std::copy(src, src + cols, out);
      std::fill(out + cols, out + kNr, 0.0);
      out += kNr;
    }
  }
}

std::size_t round_up(std::size_t x, std::size_t m) { return (x + m - 1) / m * m; }

}  // namespace

EncodedMatrix multiply_naive(const EncodedMatrix& a, const EncodedMatrix& b) {
  check_operands(a, b);
  const std::size_t n = a.n();
  EncodedMatrix c(n, a.width());
  const double* pa = a.values().data();
  const double* pb = b.values().data();
  double* pc = c.values().data();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += pa[i * n + k] * pb[k * n + j];
      pc[i * n + j] = sum;
    }
  narrow_all(c);
  return c;
}

namespace {

// C = A * B over block x block tiles. With upper_only, tiles lying wholly
// left of the diagonal block are skipped and the caller mirrors them.
void blocked_product(const EncodedMatrix& a, const EncodedMatrix& b, std::size_t block,
                     bool upper_only, EncodedMatrix& c) {
  const std::size_t n = a.n();
  const std::size_t bs = std::min(block, n);
  std::vector<double> packed_a(round_up(bs, kMr) * bs);
  std::vector<double> packed_b(round_up(n, kNr) * bs);

  const double* pa = a.values().data();
  const double* pb = b.values().data();
  double* pc = c.values().data();

  for (std::size_t pc0 = 0; pc0 < n; pc0 += bs) {
    const std::size_t kb = std::min(bs, n - pc0);
    pack_b(pb, n, pc0, kb, packed_b.data());
    for (std::size_t ic = 0; ic < n; ic += bs) {
      const std::size_t mb = std::min(bs, n - ic);
      pack_a(pa, n, ic, mb, pc0, kb, packed_a.data());
      const std::size_t first_panel = upper_only ? ic / kNr * kNr : 0;
      for (std::size_t jr = first_panel; jr < n; jr += kNr) {
        const double* panel_b = packed_b.data() + (jr / kNr) * kb * kNr;
        const std::size_t cols = std::min(kNr, n - jr);
        for (std::size_t ir = 0; ir < mb; ir += kMr) {
          micro_kernel(kb, packed_a.data() + (ir / kMr) * kb * kMr, panel_b,
                       pc + (ic + ir) * n + jr, n, std::min(kMr, mb - ir), cols);
        }
      }
    }
  }
}

}  // namespace

EncodedMatrix multiply_dense_blocked(const EncodedMatrix& a, const EncodedMatrix& b,
                                     std::size_t block) {
  check_operands(a, b);
  if (block < 1) throw InvariantError("block size must be >= 1");
  EncodedMatrix c(a.n(), a.width());
  if (a.n() == 0) return c;
  blocked_product(a, b, block, false, c);
  narrow_all(c);
  return c;
}

EncodedMatrix square_dense_blocked_symmetric(const EncodedMatrix& a, std::size_t block) {
  if (block < 1) throw InvariantError("block size must be >= 1");
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.at(i, j) != a.at(j, i)) throw InvariantError("symmetric square needs a symmetric operand");
  EncodedMatrix c(n, a.width());
  if (n == 0) return c;
  blocked_product(a, a, block, true, c);
  // (i, j) left of row i's diagonal block was skipped; its mirror (j, i)
  // sits right of row j's block start and was computed.
  const std::size_t bs = std::min(block, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row_block_start = i / bs * bs;
    for (std::size_t j = 0; j < row_block_start; ++j) c.at(i, j) = c.at(j, i);
  }
  narrow_all(c);
  return c;
}

EncodedMatrix multiply(KernelKind kind, const EncodedMatrix& a, const EncodedMatrix& b,
                       const KernelChoice& c) {
  switch (kind) {
    case KernelKind::kNaive: return multiply_naive(a, b);
    case KernelKind::kDenseBlocked: return multiply_dense_blocked(a, b, c.block);
    case KernelKind::kStrassen: return multiply_strassen(a, b, c.strassen_cutoff);
    case KernelKind::kSparse: {
      check_operands(a, b);
      return from_csr(multiply_sparse(to_csr(a), to_csr(b)));
    }
  }
  throw InvariantError("unknown kernel");
}

}  // namespace apsp
