#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/codec.hpp"
#include "apsp/graph.hpp"

namespace apsp {

/// Compressed sparse row form of an EncodedMatrix; structural zeros stand for
/// unreachable pairs.
struct CsrMatrix {
  std::size_t n = 0;
  FloatWidth width = FloatWidth::k64;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> col_idx;
  std::vector<double> values;

  std::size_t nnz() const noexcept { return values.size(); }
};

/// Throws InvariantError unless row_ptr is a nondecreasing n+1 sequence from
/// 0 to nnz, columns are strictly increasing within a row and below n, and
/// no stored value is zero.
void check_csr(const CsrMatrix& c);

enum class KernelKind { kNaive, kDenseBlocked, kStrassen, kSparse };

std::string_view kernel_name(KernelKind k) noexcept;
std::optional<KernelKind> parse_kernel_name(std::string_view s) noexcept;

struct KernelChoice {
  double threshold = 0.10;      // sparse strictly below this density
  std::size_t block = 64;       // dense tile edge
  std::size_t strassen_cutoff = 64;
  std::optional<KernelKind> force;  // bypasses density routing

  /// Throws InvariantError unless 0 < threshold < 1 and block, cutoff >= 1.
  void validate() const;
};

/// Density routing only; never returns kStrassen or kNaive.
KernelKind choose_kernel(const DensityReport& d, const KernelChoice& c);

// Every kernel accumulates in double and rounds the result to the width of
// its inputs. Inputs must share dimension and width (DimensionError).

/// Textbook i-j-k inner-product loop; the reference for the other kernels.
EncodedMatrix multiply_naive(const EncodedMatrix& a, const EncodedMatrix& b);

/// Tiled product: A is split into block x block tiles, packed, and fed to a
/// register-blocked micro-kernel. Partial tiles are zero padded.
EncodedMatrix multiply_dense_blocked(const EncodedMatrix& a, const EncodedMatrix& b,
                                     std::size_t block = 64);

/// A * A for symmetric A: computes the block upper triangle with the same
/// tiling as multiply_dense_blocked and mirrors the rest, about half the
/// work. Throws InvariantError when A is not symmetric.
EncodedMatrix square_dense_blocked_symmetric(const EncodedMatrix& a, std::size_t block = 64);

/// Strassen recursion, padding odd dimensions by one at each level, falling
/// back to multiply_dense_blocked at or below `cutoff`.
EncodedMatrix multiply_strassen(const EncodedMatrix& a, const EncodedMatrix& b,
                                std::size_t cutoff = 64);

CsrMatrix to_csr(const EncodedMatrix& a);
EncodedMatrix from_csr(const CsrMatrix& c);

/// Row-wise Gustavson product with a dense scatter accumulator.
CsrMatrix multiply_sparse(const CsrMatrix& a, const CsrMatrix& b);

/// Runs the dense kernel `kind` (sparse goes through CSR and back).
EncodedMatrix multiply(KernelKind kind, const EncodedMatrix& a, const EncodedMatrix& b,
                       const KernelChoice& c = {});

}  // namespace apsp
