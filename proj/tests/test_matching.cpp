#include <cmath>
#include <map>

#include "doctest.h"
#include "stablegraphs/matching.hpp"
#include "testutil.hpp"

using namespace stablegraphs;

TEST_CASE("maximum matching on fixed graphs") {
  CHECK(maximum_matching_size(generate_path(4)) == 2);
  CHECK(maximum_matching_size(generate_cycle(5)) == 2);
  CHECK(maximum_matching_size(generate_complete(6)) == 3);
  CHECK(maximum_matching_size(generate_star(6)) == 1);
  CHECK(maximum_matching_size(Graph(3, {})) == 0);
}

TEST_CASE("maximum matching matches brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(seed % 7);  // up to 10
    Graph g = testutil::random_graph(n, 0.25 + 0.1 * (seed % 5), seed);
    Solution m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == testutil::brute_max_matching_size(g));
  }
}

TEST_CASE("maximum matching handles blossom-rich graphs") {
  // two triangles joined by a bridge (classic odd-cycle case)
  Graph g = parse_edge_list("0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5");
  CHECK(maximum_matching_size(g) == 3);
  CHECK(maximum_matching_size(g) == testutil::brute_max_matching_size(g));
  // Petersen graph has a perfect matching
  Graph petersen = parse_edge_list(
      "0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5");
  CHECK(maximum_matching_size(petersen) == 5);
}

TEST_CASE("lexicographically smallest maximum matching") {
  CHECK(lex_min_maximum_matching(generate_path(4)) ==
        Solution::edge_set({EdgeId(0, 1), EdgeId(2, 3)}));
  CHECK(lex_min_maximum_matching(generate_path(3)) == Solution::edge_set({EdgeId(0, 1)}));
  // lexicographic choice is the smallest sorted sequence among maximum matchings
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testutil::random_graph(8, 0.35, seed + 5000);
    Solution lex = lex_min_maximum_matching(g);
    CHECK(is_matching(g, lex));
    CHECK(lex.size() == testutil::brute_max_matching_size(g));
    // brute-force the lexicographically smallest maximum matching
    std::vector<EdgeId> best;
    bool found = false;
    std::vector<char> used(g.n(), 0);
    std::vector<EdgeId> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (cur.size() == lex.size()) {
        if (!found || cur < best) {
          best = cur;
          found = true;
        }
        return;
      }
      if (idx == g.m()) return;
      rec(idx + 1);
      const EdgeId& e = g.edges()[idx];
      if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = 1;
        cur.push_back(e);
        rec(idx + 1);
        cur.pop_back();
        used[e.u] = used[e.v] = 0;
      }
    };
    rec(0);
    CHECK(lex.edges() == best);
  }
}

TEST_CASE("randomized greedy follows the priority order") {
  Graph p3 = generate_path(3);
  EdgePriorityMap pri{{EdgeId(0, 1), 0.1}, {EdgeId(1, 2), 0.9}};
  CHECK(randomized_greedy_matching(p3, pri) == Solution::edge_set({EdgeId(0, 1)}));
  pri[EdgeId(0, 1)] = 0.95;
  CHECK(randomized_greedy_matching(p3, pri) == Solution::edge_set({EdgeId(1, 2)}));
  EdgePriorityMap missing{{EdgeId(0, 1), 0.5}};
  CHECK_THROWS_AS(randomized_greedy_matching(p3, missing), ValidationError);
}

TEST_CASE("randomized greedy output is maximal") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = testutil::random_graph(12, 0.3, seed + 31);
    Solution m = randomized_greedy_matching(g, edge_priorities(g, seed));
    CHECK(is_matching(g, m));
    std::vector<char> matched(g.n(), 0);
    for (const EdgeId& e : m.edges()) matched[e.u] = matched[e.v] = 1;
    for (const EdgeId& e : g.edges()) {
      CHECK((matched[e.u] || matched[e.v]));
    }
    CHECK(2 * m.size() >= testutil::brute_max_matching_size(g));
  }
}

TEST_CASE("greedy on P3 splits evenly between the two edges") {
  Graph p3 = generate_path(3);
  int first = 0;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    Solution m = randomized_greedy_matching(p3, edge_priorities(p3, s));
    if (m.contains(EdgeId(0, 1))) ++first;
  }
  CHECK(std::abs(first / double(trials) - 0.5) < 0.02);
}

TEST_CASE("greedy on G-e with restricted priorities matches fresh sampling in distribution") {
  Graph p4 = generate_path(4);
  Graph h = p4.remove_edge(EdgeId(1, 2));
  std::map<Solution, int> restricted, fresh;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    restricted[randomized_greedy_matching(h, edge_priorities(p4, s))]++;
    fresh[randomized_greedy_matching(h, edge_priorities(h, stable_hash(1, {std::uint64_t(s)})))]++;
  }
  CHECK(restricted.size() == fresh.size());
  double chi_sq = 0.0;
  for (const auto& [sol, c] : restricted) {
    double expected = fresh.at(sol);
    chi_sq += (c - expected) * (c - expected) / std::max(1.0, expected);
  }
  CHECK(chi_sq < 30.0);
}

TEST_CASE("threshold wrap behavior") {
  Graph star = generate_star(5);
  // tiny scale forces L ~ tau
  SUBCASE("L above max degree leaves the graph alone") {
    ThresholdConfig cfg{100.0, 1e-13};
    auto inner = [](const Graph& sub, std::uint64_t) {
      return Solution::edge_set(sub.edges());
    };
    ThresholdedRun run = threshold_wrap(inner, star, cfg, 3);
    CHECK(run.removed.empty());
    CHECK(run.matching.size() == star.m());
  }
  SUBCASE("L = 2 on star(5) removes the center and yields the empty matching") {
    ThresholdConfig cfg{2.0, 1e-13};
    auto inner = [](const Graph& sub, std::uint64_t s) {
      return randomized_greedy_matching(sub, edge_priorities(sub, s));
    };
    ThresholdedRun run = threshold_wrap(inner, star, cfg, 3);
    CHECK(run.removed == std::vector<VertexId>{0});
    CHECK(run.matching.size() == 0);
  }
  SUBCASE("matching never touches a removed vertex") {
    Graph g = testutil::random_graph(14, 0.4, 8);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      ThresholdConfig cfg{3.0, 0.5};
      auto inner = [](const Graph& sub, std::uint64_t s) {
        return randomized_greedy_matching(sub, edge_priorities(sub, s));
      };
      ThresholdedRun run = threshold_wrap(inner, g, cfg, seed);
      for (const EdgeId& e : run.matching.edges()) {
        for (VertexId v : run.removed) {
          CHECK(e.u != v);
          CHECK(e.v != v);
        }
      }
    }
  }
}

TEST_CASE("stable half matching guards and validity") {
  // MM < 5 forces the exact maximum matching branch
  Graph p4 = generate_path(4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    StableMatchingRun run = stable_half_matching_run(p4, 0.2, seed);
    CHECK(run.branch == "guard-max");
    CHECK(run.matching.size() == 2);
  }
  CHECK_THROWS_AS(stable_half_matching(p4, 0.6, 1), ParameterError);
  CHECK_THROWS_AS(stable_half_matching(p4, 0.0, 1), ParameterError);

  Graph g = testutil::random_graph(30, 0.25, 404);
  REQUIRE(maximum_matching_size(g) >= 5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Solution m = stable_half_matching(g, 0.2, seed);
    CHECK(is_matching(g, m));
  }
}

TEST_CASE("half matching approximation on a moderate graph") {
  Graph g = testutil::random_graph(30, 0.2, 2718);
  const double mm = static_cast<double>(maximum_matching_size(g));
  double acc = 0.0;
  const int trials = 300;
  for (int s = 0; s < trials; ++s) {
    acc += static_cast<double>(stable_half_matching(g, 0.2, s).size());
  }
  CHECK(acc / trials >= (0.5 - 0.2) * mm);
}

TEST_CASE("greedy augmenting matching") {
  SUBCASE("eps = 1/2 gives a random maximal matching") {
    Graph g = testutil::random_graph(12, 0.3, 51);
    std::size_t mm = testutil::brute_max_matching_size(g);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Solution m = greedy_augmenting_matching(g, 0.5, seed);
      CHECK(is_matching(g, m));
      CHECK(2 * m.size() >= mm);
      std::vector<char> matched(g.n(), 0);
      for (const EdgeId& e : m.edges()) matched[e.u] = matched[e.v] = 1;
      for (const EdgeId& e : g.edges()) CHECK((matched[e.u] || matched[e.v]));
    }
  }
  SUBCASE("P5 with eps = 1/3 reaches the maximum for every seed") {
    Graph p5 = generate_path(5);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      CHECK(greedy_augmenting_matching(p5, 1.0 / 3.0, seed).size() == 2);
    }
  }
  SUBCASE("k/(k+1) lower bound on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Graph g = testutil::random_graph(10, 0.35, seed + 900);
      std::size_t mm = testutil::brute_max_matching_size(g);
      for (double eps : {0.5, 1.0 / 3.0, 0.25}) {
        double k = std::ceil(1.0 / eps - 1.0);
        Solution m = greedy_augmenting_matching(g, eps, seed);
        CHECK(is_matching(g, m));
        CHECK(static_cast<double>(m.size()) >= k / (k + 1.0) * static_cast<double>(mm) - 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(greedy_augmenting_matching(generate_path(3), 1.0, 0), ParameterError);
}

TEST_CASE("one-minus-eps matching guards and validity") {
  Graph small = generate_path(6);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // k = 2, c = 4: MM = 3 < 8 takes the guard branch
    StableMatchingRun run = stable_one_minus_eps_matching_run(small, 1.0 / 3.0, seed);
    CHECK(run.branch == "guard-max");
    CHECK(run.matching.size() == 3);
  }
  Graph g = testutil::random_graph(40, 0.3, 11);
  REQUIRE(maximum_matching_size(g) >= 8);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Solution m = stable_one_minus_eps_matching(g, 1.0 / 3.0, seed);
    CHECK(is_matching(g, m));
  }
}

TEST_CASE("mixture weight Lipschitz bounds on a sample graph") {
  const double eps = 0.2;
  Graph g = testutil::random_graph(16, 0.35, 606);
  REQUIRE(maximum_matching_size(g) >= 5);
  REQUIRE(g.m() >= 6);
  const double mm = static_cast<double>(maximum_matching_size(g));
  const double f = mixture_f(g);
  const double gv = mixture_g_half(g, eps);
  for (const EdgeId& e : g.edges()) {
    Graph h = g.remove_edge(e);
    double fe = mixture_f(h);
    double ge = mixture_g_half(h, eps);
    CHECK(fe >= f * (1.0 - 2.0 / mm) - 1e-9);
    CHECK(fe <= f * (1.0 + 1.0 / (static_cast<double>(g.m()) - 1.0)) + 1e-9);
    CHECK(ge >= gv * (1.0 - 3.0 / static_cast<double>(g.m())) - 1e-9);
    CHECK(ge <= gv * (1.0 + 4.0 / (mm - 1.0)) + 1e-9);
  }
}
