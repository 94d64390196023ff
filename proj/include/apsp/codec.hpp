#pragma once

// Exponential encoding of (min, +) distances into ordinary floats.
//
// A finite distance a becomes base^(x_tilde - a) with base = n + 1 and
// x_tilde the largest finite entry, so smaller distances map to larger
// numbers. In an ordinary product of two encoded matrices each entry is a
// sum of at most n powers base^(2 x_tilde - s_k); because base > n, the sum
// lies in [base^e, base^(e+1)) where e = 2 x_tilde - min_k s_k. Taking the
// floor logarithm recovers the (min, +) product exactly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "apsp/graph.hpp"

namespace apsp {

enum class FloatWidth : int { k32 = 32, k64 = 64 };

/// Usable binary exponent range of a float width: 127.9 (32-bit) and
/// 1024.0 (64-bit). 127.9 is a published constant, slightly below the
/// true 128 of binary32.
double emax(FloatWidth width) noexcept;

struct EncodeParams {
  std::uint64_t base = 2;  // n + 1
  Dist x_tilde = 0;        // largest finite entry of the matrix being encoded
  FloatWidth width = FloatWidth::k64;
};

EncodeParams make_encode_params(const DistMatrix& m, FloatWidth width = FloatWidth::k64);

/// log2 of the largest value a product of two encoded matrices can reach:
/// 2 * x_tilde * log2(base) + log2(base - 1).
double product_log2_bound(const EncodeParams& p) noexcept;

/// True when product_log2_bound(p) <= emax(p.width).
bool feasible(const EncodeParams& p) noexcept;

/// Dense n x n matrix of nonnegative values, row-major. Values are held as
/// doubles; for FloatWidth::k32 every stored value is exactly a binary32
/// value (possibly +inf after overflow).
class EncodedMatrix {
 public:
  EncodedMatrix() = default;
  EncodedMatrix(std::size_t n, FloatWidth width);
  EncodedMatrix(std::size_t n, FloatWidth width, std::vector<double> values);

  std::size_t n() const noexcept { return n_; }
  FloatWidth width() const noexcept { return width_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  friend bool operator==(const EncodedMatrix&, const EncodedMatrix&) = default;

 private:
  std::size_t n_ = 0;
  FloatWidth width_ = FloatWidth::k64;
  std::vector<double> values_;
};

/// Rounds v to the storage precision of `width`.
inline double narrow(double v, FloatWidth width) noexcept {
  return width == FloatWidth::k32 ? static_cast<double>(static_cast<float>(v)) : v;
}

Dist max_finite(const DistMatrix& m) noexcept;

/// Finite a -> base^(x_tilde - a), kInf -> 0. Throws FeasibilityError when
/// `enforce` is set and feasible(p) is false, and InvariantError when p does
/// not describe m (wrong base, or an entry above x_tilde).
EncodedMatrix encode(const DistMatrix& m, const EncodeParams& p, bool enforce = true);

/// 0 -> kInf, v > 0 -> 2 x_tilde - floor(log_base(v) + eps). Throws
/// DecodeError on negative or non-finite entries and on values outside the
/// range a product of two p-encoded matrices can take.
DistMatrix decode(const EncodedMatrix& c, const EncodeParams& p);

/// Guard added before flooring the logarithm: 1e-9 for 64-bit, 1e-5 for
/// 32-bit, capped at half of log_base(base / (base - 1)) which is the
/// smallest distance from an attainable log value up to the next integer.
double floor_log_guard(const EncodeParams& p) noexcept;

struct PrecisionLimits {
  double n = 1;
  FloatWidth width = FloatWidth::k64;
  double emax = 0;
  double nominal_limit = 0;  // emax / log2(n + 1)
  double safe_limit = 0;   // (emax - log2 n) / (2 log2(n + 1))
};

/// Largest supported diameter for n nodes. nominal_limit bounds base^D;
/// safe_limit bounds the largest product sum n * base^(2 D), which is the
/// quantity that actually has to fit. n is a double so the table can be
/// evaluated far beyond any materializable graph.
PrecisionLimits precision_limits(double n, FloatWidth width);

}  // namespace apsp
