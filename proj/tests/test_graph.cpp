#include "doctest.h"

#include "stablegraphs/graph.hpp"
#include "testutil.hpp"

using namespace stablegraphs;

TEST_CASE("edge ids are canonical and reject self-loops") {
  EdgeId e(3, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 3);
  CHECK(EdgeId(1, 3) == e);
  CHECK_THROWS_AS(EdgeId(2, 2), ValidationError);
}

TEST_CASE("parse_edge_list basics") {
  Graph g = parse_edge_list("0 1\n1 2");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.has_edge(EdgeId(0, 1)));
  CHECK(g.has_edge(EdgeId(1, 2)));

  Graph h = parse_edge_list("n 4\n0 1");
  CHECK(h.n() == 4);
  CHECK(h.m() == 1);
  CHECK(h.degree(2) == 0);
  CHECK(h.degree(3) == 0);

  CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
}

TEST_CASE("parse ignores comments and blank lines, reads weights") {
  Graph g = parse_edge_list("# header comment\n\n0 1 2.5\n1 2\n");
  CHECK(g.m() == 2);
  CHECK(g.weighted());
  CHECK(g.weight(EdgeId(0, 1)) == doctest::Approx(2.5));
  CHECK(g.weight(EdgeId(1, 2)) == doctest::Approx(1.0));
}

TEST_CASE("serialize then parse round-trips exactly") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Graph g = testutil::random_graph(12, 0.3, seed);
    Graph back = parse_edge_list(serialize_edge_list(g));
    CHECK(back == g);

    Graph w = testutil::with_random_weights(g, seed + 100, false);
    Graph wback = parse_edge_list(serialize_edge_list(w));
    CHECK(wback == w);
  }
}

TEST_CASE("remove_edge value semantics") {
  Graph p3 = generate_path(3);
  Graph g = p3.remove_edge(EdgeId(1, 2));
  CHECK(g.m() == 1);
  CHECK(g.has_edge(EdgeId(0, 1)));
  CHECK(g.n() == 3);
  CHECK(p3.m() == 2);  // original untouched

  CHECK_THROWS_AS(g.remove_edge(EdgeId(1, 2)), ValidationError);

  Graph empty = g.remove_edge(EdgeId(0, 1));
  CHECK(empty.m() == 0);
  CHECK(empty.n() == 3);
}

TEST_CASE("remove_edge differs from the original by exactly that edge") {
  Graph g = testutil::random_graph(15, 0.3, 7);
  for (const EdgeId& e : g.edges()) {
    Graph h = g.remove_edge(e);
    Solution a = Solution::edge_set(g.edges());
    Solution b = Solution::edge_set(h.edges());
    CHECK(hamming(a, b) == 1);
    CHECK(!h.has_edge(e));
  }
}

TEST_CASE("generator families") {
  CHECK(generate_path(4).m() == 3);
  CHECK(generate_path(4).n() == 4);
  CHECK(generate_cycle(6).m() == 6);
  CHECK(generate_complete(5).m() == 10);
  CHECK(generate_star(5).m() == 4);
  CHECK(generate_star(5).degree(0) == 4);
  CHECK(generate_erdos_renyi(10, 0.0, 3).m() == 0);
  CHECK(generate_erdos_renyi(10, 1.0, 3).m() == 45);
  CHECK(generate_erdos_renyi(10, 0.5, 9) == generate_erdos_renyi(10, 0.5, 9));
  CHECK_THROWS_AS(generate_path(0), ParameterError);
  CHECK_THROWS_AS(generate_cycle(2), ParameterError);
  CHECK_THROWS_AS(generate_erdos_renyi(5, 1.5, 0), ParameterError);
  CHECK_THROWS_AS(generate("bogus", {}), ParameterError);
}

TEST_CASE("prim adversarial family structure") {
  for (std::uint32_t n : {8u, 16u, 24u, 48u}) {
    Graph g = generate_prim_adversarial(n);
    CHECK(g.n() == n);
    CHECK(g.m() == 3 * n / 2 - 1);
    std::uint32_t half = n / 2;
    // hubs (paper's n/2-1 and n/2, 0-indexed half-2 and half-1)
    CHECK(g.degree(half - 2) == half + 1);
    CHECK(g.degree(half - 1) == half + 1);
    for (std::uint32_t j = half; j < n; ++j) {
      CHECK(g.degree(j) == 2);
      CHECK(g.has_edge(EdgeId(half - 2, j)));
      CHECK(g.has_edge(EdgeId(half - 1, j)));
    }
    CHECK(g.has_edge(EdgeId(0, half - 1)));
    CHECK(!g.has_edge(EdgeId(half - 3, half - 2)) == false);  // path edge present
    CHECK(!g.has_edge(EdgeId(half - 2, half - 1)));           // hub-hub edge absent
    CHECK(g.component_count() == 1);
  }
  CHECK_THROWS_AS(generate_prim_adversarial(7), ParameterError);
  CHECK_THROWS_AS(generate_prim_adversarial(6), ParameterError);
}

TEST_CASE("generators produce simple graphs with dense ids") {
  for (std::uint32_t n : {5u, 8u, 12u}) {
    for (const Graph& g :
         {generate_path(n), generate_cycle(n), generate_complete(n), generate_star(n)}) {
      Graph back = parse_edge_list(serialize_edge_list(g));
      CHECK(back == g);
      for (const EdgeId& e : g.edges()) {
        CHECK(e.u < e.v);
        CHECK(e.v < g.n());
      }
    }
  }
}

TEST_CASE("without_vertices keeps n and drops incident edges") {
  Graph g = generate_star(5);
  std::vector<bool> removed(5, false);
  removed[0] = true;  // center
  Graph h = g.without_vertices(removed);
  CHECK(h.n() == 5);
  CHECK(h.m() == 0);
}

TEST_CASE("graph hash distinguishes weights and edges") {
  Graph a = generate_path(4);
  Graph b = generate_cycle(4);
  CHECK(graph_hash(a) != graph_hash(b));
  Graph wa = testutil::with_random_weights(a, 1, false);
  CHECK(graph_hash(a) != graph_hash(wa));
  CHECK(graph_hash(a) == graph_hash(generate_path(4)));
}
