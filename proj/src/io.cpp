#include "apsp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "apsp/errors.hpp"

namespace apsp {

void write_distance_csv(std::ostream& out, const DistMatrix& m) {
  std::string line;
  for (std::size_t i = 0; i < m.n(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) line += ',';
      const Dist d = m.at(i, j);
      if (d == kInf)
        line += "INF";
      else
        line += std::to_string(d);
    }
    line += '\n';
    out << line;
  }
}

namespace {

void put_le(std::ostream& out, std::uint64_t v, int bytes) {
  char buf[8];
  for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(buf, bytes);
}

std::uint64_t get_le(const unsigned char* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

}  // namespace

void write_distance_binary(std::ostream& out, const DistMatrix& m, FloatWidth width) {
  out.write(kBinaryMagic, sizeof kBinaryMagic);
  put_le(out, m.n(), 8);
  put_le(out, static_cast<std::uint64_t>(width), 4);
  put_le(out, 0, 4);
  for (Dist d : m.entries()) put_le(out, d == kInf ? kBinaryInf : std::uint64_t{d}, 8);
}

BinaryDistances read_distance_binary(std::istream& in) {
  unsigned char header[24];
  if (!in.read(reinterpret_cast<char*>(header), sizeof header))
    throw ParseError(0, "binary distance file: truncated header");
  if (!std::equal(std::begin(kBinaryMagic), std::end(kBinaryMagic), header))
    throw ParseError(0, "binary distance file: bad magic");
  const std::uint64_t n = get_le(header + 8, 8);
  const std::uint64_t w = get_le(header + 16, 4);
  if (w != 32 && w != 64) throw ParseError(0, "binary distance file: width must be 32 or 64");
  if (n == 0 || n > (std::uint64_t{1} << 20)) throw ParseError(0, "binary distance file: bad n");

  std::vector<Dist> entries(n * n);
  unsigned char buf[8];
  for (auto& e : entries) {
    if (!in.read(reinterpret_cast<char*>(buf), 8))
      throw ParseError(0, "binary distance file: truncated body");
    const std::uint64_t v = get_le(buf, 8);
    if (v == kBinaryInf)
      e = kInf;
    else if (v > kMaxFinite)
      throw ParseError(0, "binary distance file: entry out of range");
    else
      e = static_cast<Dist>(v);
  }
  try {
    return {DistMatrix(n, std::move(entries)), w == 32 ? FloatWidth::k32 : FloatWidth::k64};
  } catch (const InvariantError& e) {
    throw ParseError(0, std::string("binary distance file: ") + e.what());
  }
}

void write_heatmap_pgm(std::ostream& out, const DistMatrix& m) {
  Dist top = 0;
  for (Dist d : m.entries())
    if (d != kInf) top = std::max(top, d);
  out << "P5\n" << m.n() << ' ' << m.n() << "\n255\n";
  std::vector<unsigned char> row(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      const Dist d = m.at(i, j);
      if (d == kInf)
        row[j] = 255;
      else if (top == 0)
        row[j] = 0;
      else
        row[j] = static_cast<unsigned char>((254ull * d + top / 2) / top);
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

void write_epoch_stats_csv(std::ostream& out, std::span<const EpochStats> epochs) {
  out << "epoch,max_element,finite_before,finite_after,delta,convergence_quantity,convergence_pct\n";
  char pct[32];
  for (const EpochStats& s : epochs) {
    std::snprintf(pct, sizeof pct, "%.3f", s.convergence_pct);
    out << s.epoch << ',' << s.max_element << ',' << s.finite_before << ',' << s.finite_after << ','
        << s.delta << ',' << s.convergence_quantity << ',' << pct << '\n';
  }
}

}  // namespace apsp
