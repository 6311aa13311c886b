#include "doctest.h"
#include "stablegraphs/mst.hpp"
#include "testutil.hpp"

using namespace stablegraphs;

namespace {

double solution_weight(const Graph& g, const Solution& s) {
  double w = 0.0;
  for (const EdgeId& e : s.edges()) w += g.weight(e);
  return w;
}

bool is_spanning_forest(const Graph& g, const Solution& s) {
  // forest: acyclic; spanning: component count matches g's
  std::vector<std::size_t> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const EdgeId& e : s.edges()) {
    if (!g.has_edge(e)) return false;
    std::size_t a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return s.size() == g.n() - g.component_count();
}

}  // namespace

TEST_CASE("kruskal fixed cases") {
  Graph tree = generate_path(5);
  CHECK(kruskal(tree) == Solution::edge_set(tree.edges()));

  Graph tri = generate_complete(3);
  CHECK(kruskal(tri) == Solution::edge_set({EdgeId(0, 1), EdgeId(0, 2)}));
}

TEST_CASE("prim fixed cases") {
  Graph tree = generate_path(5);
  CHECK(prim(tree) == Solution::edge_set(tree.edges()));
  Graph tri = generate_complete(3);
  CHECK(prim(tri) == Solution::edge_set({EdgeId(0, 1), EdgeId(0, 2)}));
}

TEST_CASE("both algorithms produce minimum spanning forests") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph base = testutil::random_graph(7, 0.4, seed + 100);
    for (int weighting = 0; weighting < 3; ++weighting) {
      Graph g = weighting == 0 ? base : testutil::with_random_weights(base, seed + weighting, weighting == 2);
      double best = testutil::brute_msf_weight(g);
      for (const Solution& s : {kruskal(g), prim(g)}) {
        CHECK(is_spanning_forest(g, s));
        CHECK(solution_weight(g, s) == doctest::Approx(best));
      }
    }
  }
}

TEST_CASE("kruskal changes by at most two edges per removal") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph base = testutil::random_graph(12, 0.3, seed + 300);
    Graph g = seed % 2 ? testutil::with_random_weights(base, seed, true) : base;
    Solution t = kruskal(g);
    for (const EdgeId& e : g.edges()) {
      CHECK(hamming(t, kruskal(g.remove_edge(e))) <= 2);
    }
  }
}

TEST_CASE("prim tie-break trace on the adversarial family") {
  const std::uint32_t n = 16;
  const std::uint32_t half = n / 2;  // hubs at half-2 and half-1 (0-indexed)
  Graph g = generate_prim_adversarial(n);
  Solution t = prim(g);

  // expected tree: path edges, the closing edge (0, half-1), and the full
  // star at hub half-2
  std::vector<EdgeId> expected;
  for (std::uint32_t i = 0; i + 1 <= half - 2; ++i) expected.emplace_back(i, i + 1);
  expected.emplace_back(0, half - 1);
  for (std::uint32_t j = half; j < n; ++j) expected.emplace_back(half - 2, j);
  CHECK(t == Solution::edge_set(expected));

  // removing a path edge (i, i+1), i <= half-3 (paper's i' in [n/2-2],
  // 1-indexed) flips the whole star to the other hub
  for (std::uint32_t i = 0; i + 1 <= half - 2; ++i) {
    Graph h = g.remove_edge(EdgeId(i, i + 1));
    Solution ti = prim(h);
    std::vector<EdgeId> expected_i;
    for (std::uint32_t j = 0; j + 1 <= half - 2; ++j) {
      if (j != i) expected_i.emplace_back(j, j + 1);
    }
    expected_i.emplace_back(0, half - 1);
    for (std::uint32_t j = half; j < n; ++j) expected_i.emplace_back(half - 1, j);
    expected_i.emplace_back(half - 2, half);  // hub half-2 reattaches through the first leaf
    CHECK(ti == Solution::edge_set(expected_i));
    CHECK(hamming(t, ti) == n);  // n/2 tree edges replaced, each counted twice
  }
}
