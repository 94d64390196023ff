#include "apsp/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "apsp/errors.hpp"

namespace apsp {

namespace {

// Unbiased enough for graph generation and, unlike
// std::uniform_int_distribution, identical on every standard library.
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace

Graph generate_scale_free(const GenSpec& spec) {
  if (spec.m_attach < 1 || spec.n <= spec.m_attach)
    throw InvariantError("scale-free generator needs n > m_attach >= 1 (n=" +
                         std::to_string(spec.n) + ", m=" + std::to_string(spec.m_attach) + ")");
  const std::size_t m = spec.m_attach;
  std::mt19937_64 rng(spec.seed);

  std::vector<Edge> edges;
  edges.reserve((spec.n - m) * m);
  std::vector<std::uint32_t> endpoints;
  endpoints.reserve(2 * (spec.n - m) * m);

  for (std::uint32_t leaf = 1; leaf <= m; ++leaf) {
    edges.push_back({0, leaf, 1});
    endpoints.push_back(0);
    endpoints.push_back(leaf);
  }

  std::vector<std::uint32_t> targets;
  for (std::size_t t = m + 1; t < spec.n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      const std::uint32_t cand = endpoints[draw_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), cand) == targets.end()) targets.push_back(cand);
    }
    const auto node = static_cast<std::uint32_t>(t);
    for (std::uint32_t target : targets) {
      edges.push_back({target, node, 1});
      endpoints.push_back(target);
      endpoints.push_back(node);
    }
  }
  return Graph(spec.n, std::move(edges), false);
}

DiameterInfo diameter(const DistMatrix& d) noexcept {
  DiameterInfo info;
  for (Dist x : d.entries()) {
    if (x == kInf)
      info.disconnected = true;
    else
      info.max_finite = std::max(info.max_finite, x);
  }
  return info;
}

double estimate_diameter(double n) {
  if (!(n >= 1.0)) throw InvariantError("estimate_diameter needs n >= 1");
  return std::log(n) + 1.0;
}

double closeness(const DistMatrix& d, std::size_t v) {
  if (v >= d.n()) throw InvariantError("node " + std::to_string(v) + " out of range");
  std::size_t reachable = 0;
  std::uint64_t total = 0;
  const auto row = d.row(v);
  for (std::size_t u = 0; u < d.n(); ++u) {
    if (u == v || row[u] == kInf) continue;
    ++reachable;
    total += row[u];
  }
  if (reachable == 0) throw InvariantError("node " + std::to_string(v) + " reaches no other node");
  return static_cast<double>(reachable) / static_cast<double>(total);
}

}  // namespace apsp
