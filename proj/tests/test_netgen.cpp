#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "apsp/errors.hpp"
#include "apsp/netgen.hpp"
#include "apsp/solver.hpp"
#include "test_util.hpp"

using namespace apsp;
using namespace apsp::testing;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
  return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

bool connected(const Graph& g) {
  std::vector<std::size_t> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  for (std::size_t v = 0; v < g.n(); ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace

TEST_CASE("generate_scale_free") {
  SUBCASE("m=1 grows a tree") {
    const Graph g = generate_scale_free({5, 1, 42});
    CHECK(g.n() == 5);
    CHECK(g.edges().size() == 4);
    CHECK(connected(g));
  }
  SUBCASE("edge count n=1000 m=3") {
    const Graph g = generate_scale_free({1000, 3, 7});
    CHECK(g.edges().size() == 2991);
    CHECK(connected(g));
    CHECK_FALSE(g.directed());
  }
  SUBCASE("same seed, same graph") {
    const Graph a = generate_scale_free({300, 2, 99});
    const Graph b = generate_scale_free({300, 2, 99});
    CHECK(same_edges(a, b));
    CHECK_FALSE(same_edges(a, generate_scale_free({300, 2, 100})));
  }
  SUBCASE("no self loops or repeated edges, unit weights") {
    const Graph g = generate_scale_free({2000, 5, 3});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const Edge& e : g.edges()) {
      CHECK(e.u != e.v);
      CHECK(e.w == 1);
      seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(g.edges().size() == (2000 - 5) * 5);
  }
  SUBCASE("hubs emerge") {
    const Graph g = generate_scale_free({5000, 2, 1});
    std::vector<std::size_t> deg(g.n(), 0);
    for (const Edge& e : g.edges()) ++deg[e.u], ++deg[e.v];
    // mean degree is about 4; preferential attachment yields hubs far above it
    CHECK(*std::max_element(deg.begin(), deg.end()) > 60);
  }
  CHECK_THROWS_AS(generate_scale_free({3, 3, 0}), InvariantError);
  CHECK_THROWS_AS(generate_scale_free({3, 0, 0}), InvariantError);
}

TEST_CASE("diameter") {
  CHECK(diameter(p3_solved()).max_finite == 2);
  CHECK_FALSE(diameter(p3_solved()).disconnected);
  const DistMatrix k4(4, {0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
  CHECK(diameter(k4).max_finite == 1);
  const DistMatrix split(3, {0, 4, kInf, 4, 0, kInf, kInf, kInf, 0});
  CHECK(diameter(split).max_finite == 4);
  CHECK(diameter(split).disconnected);
  CHECK(diameter(DistMatrix(1, {0})).max_finite == 0);
}

TEST_CASE("estimate_diameter") {
  CHECK(estimate_diameter(1e8) == doctest::Approx(19.4).epsilon(0.1 / 19.4));
  CHECK(estimate_diameter(1e23) == doctest::Approx(54.0).epsilon(0.1 / 54.0));
  CHECK(estimate_diameter(10) == doctest::Approx(3.30).epsilon(0.01 / 3.3));
  CHECK(estimate_diameter(1) == doctest::Approx(1.0));
}

TEST_CASE("closeness") {
  CHECK(closeness(p3_solved(), 1) == doctest::Approx(1.0));
  CHECK(closeness(p3_solved(), 0) == doctest::Approx(2.0 / 3.0));
  const DistMatrix k4(4, {0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
  for (std::size_t v = 0; v < 4; ++v) CHECK(closeness(k4, v) == doctest::Approx(1.0));
  const DistMatrix lone(2, {0, kInf, kInf, 0});
  CHECK_THROWS_AS(closeness(lone, 0), InvariantError);
  CHECK_THROWS_AS(closeness(p3_solved(), 3), InvariantError);
}

TEST_CASE("generated graphs stay within the small-world band") {
  for (std::size_t m : {2, 3, 5}) {
    const Graph g = generate_scale_free({800, m, 5});
    const SolveResult r = power_law_bound(to_distance_matrix(g));
    const DiameterInfo d = diameter(r.distances);
    CAPTURE(m);
    CHECK_FALSE(d.disconnected);
    CHECK(d.max_finite <= 2 * estimate_diameter(800.0));
    CHECK(r.epochs.size() <= ceil_log2(d.max_finite) + 1);
  }
}
