#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apsp {

/// Path length. kInf marks an unreachable pair and never takes part in
/// arithmetic; every finite value is strictly below it.
using Dist = std::uint32_t;
inline constexpr Dist kInf = std::numeric_limits<Dist>::max();
inline constexpr Dist kMaxFinite = kInf - 1;

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  Dist w = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted graph on dense node ids [0, n).
///
/// Construction validates endpoints, rejects self loops and zero weights,
/// and requires (n - 1) * max_weight <= kMaxFinite so every shortest path
/// length is representable as a finite Dist.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges, bool directed);

  std::size_t n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool directed() const noexcept { return directed_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  bool directed_;
};

/// Square n x n distance matrix stored row-major. The diagonal is zero.
class DistMatrix {
 public:
  DistMatrix() = default;
  /// Throws InvariantError on a size mismatch or a nonzero diagonal entry.
  DistMatrix(std::size_t n, std::vector<Dist> entries);

  /// n x n matrix with 0 on the diagonal and kInf elsewhere: the identity of
  /// the (min, +) product.
  static DistMatrix identity(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  Dist at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const Dist> row(std::size_t i) const {
    return std::span<const Dist>(entries_).subspan(i * n_, n_);
  }
  std::span<const Dist> entries() const noexcept { return entries_; }
  bool symmetric() const;

  friend bool operator==(const DistMatrix&, const DistMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Dist> entries_;
};

struct DensityReport {
  std::size_t finite_count = 0;  // diagonal included
  std::size_t n_squared = 0;
  double density = 0.0;
};

/// Parses whitespace-separated "u v" or "u v w" lines. Blank lines and lines
/// starting with '#' are skipped, except a "#n <count>" header which fixes the
/// node count (otherwise 1 + the largest id seen). Duplicate edges keep the
/// smallest weight; undirected edges are stored once with u < v. Edges are
/// returned sorted by (u, v).
Graph parse_edge_list(std::string_view text, bool directed);

/// Renders a graph in the format accepted by parse_edge_list, with a "#n"
/// header so isolated trailing nodes survive a round trip.
std::string format_edge_list(const Graph& g);

struct RemappedGraph {
  Graph graph;
  std::vector<std::uint32_t> original_ids;  // new id -> old id
};

/// Drops node ids with no incident edge and renumbers the rest densely,
/// preserving order.
RemappedGraph compact_node_ids(const Graph& g);

DistMatrix to_distance_matrix(const Graph& g);

DensityReport density(const DistMatrix& m);

/// Number of finite entries, diagonal included.
std::size_t finite_count(const DistMatrix& m);

}  // namespace apsp
