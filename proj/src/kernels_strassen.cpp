#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

namespace {

struct Square {
  std::size_t n = 0;
  std::vector<double> v;

  explicit Square(std::size_t size) : n(size), v(size * size, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return v[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

// m x m quadrant (qi, qj) of s, zero padded past s.n.
Square quadrant(const Square& s, std::size_t m, std::size_t qi, std::size_t qj) {
  Square q(m);
  const std::size_t r0 = qi * m;
  const std::size_t c0 = qj * m;
  for (std::size_t i = 0; i < m && r0 + i < s.n; ++i) {
    const std::size_t cols = std::min(m, s.n - std::min(s.n, c0));
    const double* src = s.v.data() + (r0 + i) * s.n + c0;
    std::copy(src, src + cols, q.v.data() + i * m);
  }
  return q;
}

Square add(const Square& a, const Square& b) {
  Square r(a.n);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

Square sub(const Square& a, const Square& b) {
  Square r(a.n);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

Square base_case(const Square& a, const Square& b) {
  const EncodedMatrix ea(a.n, FloatWidth::k64, a.v);
  const EncodedMatrix eb(b.n, FloatWidth::k64, b.v);
  const EncodedMatrix ec = multiply_dense_blocked(ea, eb);
  Square c(a.n);
  std::copy(ec.values().begin(), ec.values().end(), c.v.begin());
  return c;
}

Square strassen(const Square& a, const Square& b, std::size_t cutoff) {
  if (a.n <= cutoff) return base_case(a, b);
  const std::size_t m = (a.n + 1) / 2;
  const Square a11 = quadrant(a, m, 0, 0), a12 = quadrant(a, m, 0, 1);
  const Square a21 = quadrant(a, m, 1, 0), a22 = quadrant(a, m, 1, 1);
  const Square b11 = quadrant(b, m, 0, 0), b12 = quadrant(b, m, 0, 1);
  const Square b21 = quadrant(b, m, 1, 0), b22 = quadrant(b, m, 1, 1);

  const Square m1 = strassen(add(a11, a22), add(b11, b22), cutoff);
  const Square m2 = strassen(add(a21, a22), b11, cutoff);
  const Square m3 = strassen(a11, sub(b12, b22), cutoff);
  const Square m4 = strassen(a22, sub(b21, b11), cutoff);
  const Square m5 = strassen(add(a11, a12), b22, cutoff);
  const Square m6 = strassen(sub(a21, a11), add(b11, b12), cutoff);
  const Square m7 = strassen(sub(a12, a22), add(b21, b22), cutoff);

  Square c(a.n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double c11 = m1.at(i, j) + m4.at(i, j) - m5.at(i, j) + m7.at(i, j);
      const double c12 = m3.at(i, j) + m5.at(i, j);
      const double c21 = m2.at(i, j) + m4.at(i, j);
      const double c22 = m1.at(i, j) - m2.at(i, j) + m3.at(i, j) + m6.at(i, j);
      c.at(i, j) = c11;
      if (m + j < a.n) c.at(i, m + j) = c12;
      if (m + i < a.n) c.at(m + i, j) = c21;
      if (m + i < a.n && m + j < a.n) c.at(m + i, m + j) = c22;
    }
  return c;
}

// First-order max-norm error bound of the recursion over the standard
// product, |C - C^| <= ((n/n0)^log2(12) (n0^2 + 5 n0) - 5 n) u |A| |B|,
// with n the padded size and n0 the leaf size.
double error_bound(std::size_t n, std::size_t cutoff, double norm_a, double norm_b) {
  std::size_t levels = 0;
  std::size_t leaf = n;
  while (leaf > cutoff) {
    leaf = (leaf + 1) / 2;
    ++levels;
  }
  const double n0 = static_cast<double>(leaf);
  const double padded = n0 * std::ldexp(1.0, static_cast<int>(levels));
  const double growth = std::pow(12.0, static_cast<double>(levels)) * (n0 * n0 + 5.0 * n0) - 5.0 * padded;
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;
  // factor 4 absorbs the second-order terms
  return 4.0 * std::max(growth, n0) * u * norm_a * norm_b;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

// Cancellation in the recombination step leaves an absolute error tied to
// the largest operand entries, which can swamp small entries of an encoded
// product. Entries whose bound exceeds a relative 2^-40 are therefore
// recomputed as direct dot products, so every returned entry carries a
// small relative error and decodes like the standard product.
EncodedMatrix multiply_strassen(const EncodedMatrix& a, const EncodedMatrix& b, std::size_t cutoff) {
  if (a.n() != b.n()) throw DimensionError("operand dimensions differ");
  if (a.width() != b.width()) throw DimensionError("operand float widths differ");
  if (cutoff < 1) throw InvariantError("strassen cutoff must be >= 1");
  const std::size_t n = a.n();

  Square sa(n), sb(n);
  std::copy(a.values().begin(), a.values().end(), sa.v.begin());
  std::copy(b.values().begin(), b.values().end(), sb.v.begin());
  Square sc = strassen(sa, sb, cutoff);

  EncodedMatrix c(n, a.width(), std::move(sc.v));
  if (n > cutoff) {
    const double bound = error_bound(n, cutoff, max_abs(a.values()), max_abs(b.values()));
    constexpr double kRel = 0x1p-40;
    const double* pa = a.values().data();
    const double* pb = b.values().data();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double& v = c.at(i, j);
        if (v > 0.0 && bound * (1.0 + kRel) <= kRel * v) continue;
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += pa[i * n + k] * pb[k * n + j];
        v = sum;
      }
  }
  if (c.width() == FloatWidth::k32)
    for (double& v : c.values()) v = narrow(v, FloatWidth::k32);
  return c;
}

}  // namespace apsp
