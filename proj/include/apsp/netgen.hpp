#pragma once

#include <cstddef>
#include <cstdint>

#include "apsp/graph.hpp"

namespace apsp {

struct GenSpec {
  std::size_t n = 0;
  std::size_t m_attach = 1;
  std::uint64_t seed = 0;
};

/// Barabasi-Albert preferential attachment, undirected and unit weight.
///
/// Seeding: nodes 0..m are a star centred on node 0 (m edges). Each later
/// node t attaches to m distinct existing nodes, each drawn uniformly from
/// the list of all edge endpoints so far (so proportional to degree);
/// repeated draws are rejected. Draws use std::mt19937_64 seeded with
/// `seed`, reduced by multiply-shift, so output is identical across
/// platforms. Edge count is (n - m) * m. Throws InvariantError unless
/// n > m_attach >= 1.
Graph generate_scale_free(const GenSpec& spec);

struct DiameterInfo {
  Dist max_finite = 0;
  bool disconnected = false;
};

/// Largest finite entry of a solved distance matrix, with a flag when any
/// pair is unreachable. Components are not analysed separately.
DiameterInfo diameter(const DistMatrix& d) noexcept;

/// ln(n) + 1, the small-world diameter estimate.
double estimate_diameter(double n);

/// reachable / sum of finite distances from v over u != v. Throws
/// InvariantError when v reaches no other node.
double closeness(const DistMatrix& d, std::size_t v);

}  // namespace apsp
