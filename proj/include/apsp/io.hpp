#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "apsp/codec.hpp"
#include "apsp/graph.hpp"
#include "apsp/solver.hpp"

namespace apsp {

/// One line per row, entries comma separated, unreachable as "INF".
void write_distance_csv(std::ostream& out, const DistMatrix& m);

// Binary distance matrix, all integers little-endian:
//   bytes 0..7   magic "APSPDIST"
//   bytes 8..15  u64 n
//   bytes 16..19 u32 float width used by the solve (32 or 64)
//   bytes 20..23 u32 reserved, 0
//   then n*n u64 entries row-major, unreachable = 0xFFFFFFFFFFFFFFFF
inline constexpr char kBinaryMagic[8] = {'A', 'P', 'S', 'P', 'D', 'I', 'S', 'T'};
inline constexpr std::uint64_t kBinaryInf = ~std::uint64_t{0};

void write_distance_binary(std::ostream& out, const DistMatrix& m, FloatWidth width);

struct BinaryDistances {
  DistMatrix matrix;
  FloatWidth width = FloatWidth::k64;
};
/// Throws ParseError on a bad header, truncated body or out-of-range entry.
BinaryDistances read_distance_binary(std::istream& in);

/// Binary PGM (P5), one pixel per entry: 0 for distance 0 scaling to 254 at
/// the largest finite distance, 255 for unreachable.
void write_heatmap_pgm(std::ostream& out, const DistMatrix& m);

/// Header plus one row per epoch:
/// epoch,max_element,finite_before,finite_after,delta,convergence_quantity,convergence_pct
void write_epoch_stats_csv(std::ostream& out, std::span<const EpochStats> epochs);

}  // namespace apsp
