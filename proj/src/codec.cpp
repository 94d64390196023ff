#include "apsp/codec.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "apsp/errors.hpp"

namespace apsp {

double emax(FloatWidth width) noexcept { return width == FloatWidth::k32 ? 127.9 : 1024.0; }

EncodeParams make_encode_params(const DistMatrix& m, FloatWidth width) {
  return EncodeParams{static_cast<std::uint64_t>(m.n()) + 1, max_finite(m), width};
}

double product_log2_bound(const EncodeParams& p) noexcept {
  const double lb = std::log2(static_cast<double>(p.base));
  return 2.0 * static_cast<double>(p.x_tilde) * lb + std::log2(static_cast<double>(p.base - 1));
}

bool feasible(const EncodeParams& p) noexcept { return product_log2_bound(p) <= emax(p.width); }

EncodedMatrix::EncodedMatrix(std::size_t n, FloatWidth width)
    : n_(n), width_(width), values_(n * n, 0.0) {}

EncodedMatrix::EncodedMatrix(std::size_t n, FloatWidth width, std::vector<double> values)
    : n_(n), width_(width), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw DimensionError("encoded matrix needs n*n values");
}

Dist max_finite(const DistMatrix& m) noexcept {
  Dist best = 0;
  for (Dist d : m.entries())
    if (d != kInf && d > best) best = d;
  return best;
}

EncodedMatrix encode(const DistMatrix& m, const EncodeParams& p, bool enforce) {
  if (p.base != m.n() + 1)
    throw InvariantError("encode base must be n + 1 (n=" + std::to_string(m.n()) +
                         ", base=" + std::to_string(p.base) + ")");
  if (p.base < 2) throw InvariantError("encode base must be >= 2");
  if (enforce && !feasible(p)) {
    const auto lim = precision_limits(static_cast<double>(m.n()), p.width);
    throw FeasibilityError("largest entry " + std::to_string(p.x_tilde) + " exceeds the " +
                           std::to_string(static_cast<int>(p.width)) +
                           "-bit safe limit " + std::to_string(lim.safe_limit) + " for n=" +
                           std::to_string(m.n()));
  }

  // powers[k] = base^k rounded to the storage width; overflow becomes +inf
  std::vector<double> powers(std::size_t{p.x_tilde} + 1);
  const auto base = static_cast<double>(p.base);
  for (std::size_t k = 0; k < powers.size(); ++k)
    powers[k] = narrow(std::pow(base, static_cast<double>(k)), p.width);

  EncodedMatrix out(m.n(), p.width);
  auto dst = out.values();
  const auto src = m.entries();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const Dist d = src[i];
    if (d == kInf) continue;
    if (d > p.x_tilde)
      throw InvariantError("entry " + std::to_string(d) + " exceeds x_tilde " +
                           std::to_string(p.x_tilde));
    dst[i] = powers[p.x_tilde - d];
  }
  return out;
}

double floor_log_guard(const EncodeParams& p) noexcept {
  const double eps = p.width == FloatWidth::k32 ? 1e-5 : 1e-9;
  const auto base = static_cast<double>(p.base);
  const double gap = std::log(base / (base - 1.0)) / std::log(base);
  return std::min(eps, 0.5 * gap);
}

DistMatrix decode(const EncodedMatrix& c, const EncodeParams& p) {
  if (p.base != c.n() + 1) throw InvariantError("decode base must be n + 1");
  const double inv_log_base = 1.0 / std::log(static_cast<double>(p.base));
  const double guard = floor_log_guard(p);
  const auto top = static_cast<std::int64_t>(2) * p.x_tilde;

  const auto src = c.values();
  std::vector<Dist> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double v = src[i];
    if (!std::isfinite(v))
      throw DecodeError(DecodeError::Kind::kNonFinite,
                        "non-finite product entry at (" + std::to_string(i / c.n()) + ", " +
                            std::to_string(i % c.n()) + "): the encoding overflowed");
    if (v < 0.0)
      throw DecodeError(DecodeError::Kind::kNegativeEntry,
                        "negative product entry at (" + std::to_string(i / c.n()) + ", " +
                            std::to_string(i % c.n()) + ")");
    if (v == 0.0) {
      out[i] = kInf;
      continue;
    }
    const auto e = static_cast<std::int64_t>(std::floor(std::log(v) * inv_log_base + guard));
    if (e < 0 || e > top)
      throw DecodeError(DecodeError::Kind::kOutOfRange,
                        "product entry " + std::to_string(v) + " outside the encodable range");
    out[i] = static_cast<Dist>(top - e);
  }
  try {
    return DistMatrix(c.n(), std::move(out));
  } catch (const InvariantError& e) {
    throw DecodeError(DecodeError::Kind::kOutOfRange, e.what());
  }
}

PrecisionLimits precision_limits(double n, FloatWidth width) {
  if (!(n >= 1.0)) throw InvariantError("precision_limits needs n >= 1");
  PrecisionLimits l;
  l.n = n;
  l.width = width;
  l.emax = emax(width);
  const double lb = std::log2(n + 1.0);
  l.nominal_limit = l.emax / lb;
  l.safe_limit = (l.emax - std::log2(n)) / (2.0 * lb);
  return l;
}

}  // namespace apsp
