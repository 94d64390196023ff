#pragma once

// Shared fixtures and reference computations for the test suites. Nothing
// here calls into the encode/multiply/decode path it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "apsp/codec.hpp"
#include "apsp/graph.hpp"

namespace apsp::testing {

inline DistMatrix p3() { return DistMatrix(3, {0, 1, kInf, 1, 0, 1, kInf, 1, 0}); }

inline DistMatrix p3_solved() { return DistMatrix(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}); }

inline DistMatrix path_matrix(std::size_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return to_distance_matrix(Graph(n, std::move(edges), false));
}

/// Triple loop over long double, independent of the kernels under test.
inline std::vector<long double> brute_product(std::size_t n, const std::vector<double>& a,
                                              const std::vector<double>& b) {
  std::vector<long double> c(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c[i * n + j] += static_cast<long double>(a[i * n + k]) * b[k * n + j];
  return c;
}

/// Direct min over k of a_ik + b_kj.
inline DistMatrix brute_min_plus(const DistMatrix& a, const DistMatrix& b) {
  const std::size_t n = a.n();
  std::vector<Dist> c(n * n, kInf);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.at(i, k) != kInf && b.at(k, j) != kInf)
          c[i * n + j] = std::min<Dist>(c[i * n + j], a.at(i, k) + b.at(k, j));
  return DistMatrix(n, std::move(c));
}

/// Erdos-Renyi style graph: each ordered (directed) or unordered pair is an
/// edge with probability p, weights uniform in [1, max_w].
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool directed, Dist max_w) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || coin(rng) >= p) continue;
      edges.push_back({u, v, static_cast<Dist>(1 + rng() % max_w)});
    }
  return Graph(n, std::move(edges), directed);
}

/// Random distance-like matrix: zero diagonal, each off-diagonal entry INF
/// with probability p_inf, else uniform in [1, max_d].
inline DistMatrix random_dist_matrix(std::mt19937_64& rng, std::size_t n, double p_inf, Dist max_d) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Dist> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) e[i * n + j] = coin(rng) < p_inf ? kInf : static_cast<Dist>(1 + rng() % max_d);
  return DistMatrix(n, std::move(e));
}

}  // namespace apsp::testing
