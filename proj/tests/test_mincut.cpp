#include <cmath>
#include <map>

#include "doctest.h"
#include "stablegraphs/mincut.hpp"
#include "testutil.hpp"

using namespace stablegraphs;

TEST_CASE("min cut value on fixed graphs") {
  CHECK(min_cut_value(generate_cycle(4)) == 2);
  CHECK(min_cut_value(generate_path(6)) == 1);
  CHECK(min_cut_value(generate_complete(4)) == 3);
  Graph disconnected(4, {EdgeId(0, 1), EdgeId(2, 3)});
  CHECK(min_cut_value(disconnected) == 0);
  CHECK_THROWS_AS(min_cut_value(Graph(1, {})), ParameterError);
}

TEST_CASE("min cut value matches brute force") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(seed % 6);
    Graph g = testutil::random_graph(n, 0.3 + 0.1 * (seed % 4), seed + 42);
    CHECK(min_cut_value(g) == testutil::brute_min_cut_value(g));
  }
}

TEST_CASE("small cut enumeration on fixed graphs") {
  SUBCASE("C4 at threshold 2 has 12 cuts") {
    EnumeratedCuts cuts = enumerate_small_cuts(generate_cycle(4), 2.0, 0);
    CHECK(cuts.exhaustive);
    CHECK(cuts.cuts.size() == 12);
    for (const CutSolution& c : cuts.cuts) CHECK(c.cost == 2);
  }
  SUBCASE("K4 at threshold 3 has the 8 singleton-style cuts") {
    EnumeratedCuts cuts = enumerate_small_cuts(generate_complete(4), 3.0, 0);
    CHECK(cuts.cuts.size() == 8);
    for (const CutSolution& c : cuts.cuts) {
      CHECK(c.cost == 3);
      CHECK((c.side.size() == 1 || c.side.size() == 3));
    }
  }
  SUBCASE("threshold >= m yields all proper subsets") {
    Graph g = generate_cycle(5);
    EnumeratedCuts cuts = enumerate_small_cuts(g, static_cast<double>(g.m()), 0);
    CHECK(cuts.cuts.size() == (1u << 5) - 2);
  }
  SUBCASE("threshold below OPT is rejected") {
    CHECK_THROWS_AS(enumerate_small_cuts(generate_cycle(4), 1.0, 0), ParameterError);
  }
}

TEST_CASE("enumeration costs agree with brute force") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testutil::random_graph(7, 0.45, seed + 7);
    double threshold = testutil::brute_min_cut_value(g) + 2.0;
    EnumeratedCuts cuts = enumerate_small_cuts(g, threshold, 0);
    std::size_t expected = 0;
    for (std::uint64_t mask = 1; mask + 1 < (1ULL << g.n()); ++mask) {
      if (testutil::brute_cut_cost(g, mask) <= threshold) ++expected;
    }
    CHECK(cuts.cuts.size() == expected);
    for (const CutSolution& c : cuts.cuts) {
      std::vector<char> in_side(g.n(), 0);
      for (VertexId v : c.side.vertices()) in_side[v] = 1;
      CHECK(c.cost == cut_cost(g, in_side));
    }
  }
}

TEST_CASE("karger enumeration finds every near-minimum cut of a larger cycle") {
  Graph g = generate_cycle(22);  // n > 20 exercises the contraction path
  EnumeratedCuts cuts = enumerate_small_cuts(g, 2.0, 123);
  CHECK(!cuts.exhaustive);
  // cuts of cost two in a cycle are the contiguous arcs: 22*21/2 = 231 sides
  // plus orientations
  CHECK(cuts.cuts.size() == 2 * 231);
}

TEST_CASE("gibbs oracle basics") {
  Graph c4 = generate_cycle(4);
  SUBCASE("alpha 0 is uniform over all proper subsets") {
    ExactDistribution d = gibbs_cut_oracle(c4, 0.0);
    CHECK(d.size() == 14);
    for (const auto& [sol, p] : d.support()) CHECK(p == doctest::Approx(1.0 / 14.0));
  }
  SUBCASE("large alpha concentrates on minimum cuts") {
    ExactDistribution d = gibbs_cut_oracle(c4, 50.0);
    double mass_on_min = 0.0;
    for (const auto& [sol, p] : d.support()) {
      std::vector<char> in_side(4, 0);
      for (VertexId v : sol.vertices()) in_side[v] = 1;
      if (cut_cost(c4, in_side) == 2) mass_on_min += p;
    }
    CHECK(mass_on_min > 1.0 - 1e-6);
    // 12 minimum cuts share the mass evenly
    for (const auto& [sol, p] : d.support()) {
      std::vector<char> in_side(4, 0);
      for (VertexId v : sol.vertices()) in_side[v] = 1;
      if (cut_cost(c4, in_side) == 2) CHECK(p == doctest::Approx(1.0 / 12.0).epsilon(1e-6));
    }
  }
  SUBCASE("probabilities normalize") {
    ExactDistribution d = gibbs_cut_oracle(generate_complete(5), 0.7);
    double total = 0.0;
    for (const auto& [sol, p] : d.support()) total += p;
    CHECK(std::abs(total - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(gibbs_cut_oracle(Graph(17, {}), 1.0), CapacityError);
}

TEST_CASE("stable min cut output cost stays within the enumeration threshold") {
  for (double eps : {0.3, 0.5, 1.0}) {
    Graph g = generate_complete(5);
    std::uint32_t opt = min_cut_value(g);
    double threshold = (2.0 + 7.0 * eps) * opt + 2.0 * eps;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      CutSolution cut = stable_min_cut(g, eps, seed);
      CHECK(static_cast<double>(cut.cost) <= threshold);
      CHECK(cut.side.size() >= 1);
      CHECK(cut.side.size() <= g.n() - 1);
    }
  }
}

TEST_CASE("stable min cut on a disconnected graph returns a zero cut") {
  Graph g(5, {EdgeId(0, 1), EdgeId(1, 2), EdgeId(3, 4)});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(stable_min_cut(g, 0.5, seed).cost == 0);
  }
}

TEST_CASE("sampler distribution matches its exact law on C4") {
  Graph c4 = generate_cycle(4);
  ExactDistribution law = stable_min_cut_distribution(c4, 0.5);
  std::map<Solution, int> counts;
  const int trials = 20000;
  for (int s = 0; s < trials; ++s) {
    counts[stable_min_cut(c4, 0.5, s).side]++;
  }
  std::vector<std::pair<Solution, double>> empirical;
  for (const auto& [sol, c] : counts) {
    empirical.emplace_back(sol, c / double(trials));
  }
  // pad missing outcomes with zero mass is unnecessary for TV via union
  double total = 0;
  for (auto& [s, p] : empirical) total += p;
  REQUIRE(total == doctest::Approx(1.0));
  CHECK(tv_distance(ExactDistribution(empirical), law) < 0.02);
}

TEST_CASE("gibbs normalizer is monotone under edge removal") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = testutil::random_graph(8, 0.5, seed + 77);
    if (g.m() == 0) continue;
    std::uint32_t opt_for_alpha = std::max(1u, testutil::brute_min_cut_value(g));
    double alpha = 2.0 * std::log(8.0) / opt_for_alpha;
    double log_z = log_gibbs_normalizer(g, alpha);
    for (const EdgeId& e : g.edges()) {
      double log_z_e = log_gibbs_normalizer(g.remove_edge(e), alpha);
      CHECK(log_z <= log_z_e + 1e-12);
    }
  }
}
