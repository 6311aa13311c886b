#include <cmath>
#include <map>

#include "doctest.h"
#include "stablegraphs/priorities.hpp"
#include "stablegraphs/rng.hpp"
#include "testutil.hpp"

using namespace stablegraphs;

TEST_CASE("streams are reproducible and seed-sensitive") {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
  }
  CHECK(a.next_u64() != c.next_u64());
  CHECK(stable_hash(1, {2, 3}) == stable_hash(1, {2, 3}));
  CHECK(stable_hash(1, {2, 3}) != stable_hash(1, {3, 2}));
}

TEST_CASE("uniform01 stays inside the open unit interval") {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform01();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("laplace lower tail matches the closed form") {
  // Pr[L < (1-eps) mu] = exp(-eps mu / phi) / 2 exactly for the Laplace law
  LaplaceParams params{10.0, 1.0};
  Rng rng(2024);
  const int n = 1000000;
  int below = 0;
  for (int i = 0; i < n; ++i) {
    if (sample_laplace(params, rng) < 9.0) ++below;
  }
  double expected = std::exp(-1.0) / 2.0;
  double sigma = std::sqrt(expected * (1 - expected) / n);
  CHECK(std::abs(static_cast<double>(below) / n - expected) < 3 * sigma);
}

TEST_CASE("laplace degenerate scale concentrates at mu") {
  LaplaceParams params{5.0, 1e-12};
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    CHECK(std::abs(sample_laplace(params, rng) - 5.0) < 1e-9);
  }
}

TEST_CASE("laplace empirical mean honors the CLT bound") {
  LaplaceParams params{3.0, 2.0};
  Rng rng(5);
  const int n = 1000000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += sample_laplace(params, rng);
  // variance of Laplace is 2 phi^2
  double tolerance = 4.0 * params.phi * std::sqrt(2.0 / n);
  CHECK(std::abs(acc / n - params.mu) < tolerance);
}

TEST_CASE("laplace rejects nonpositive scale") {
  Rng rng(1);
  LaplaceParams bad{0.0, 0.0};
  CHECK_THROWS_AS(sample_laplace(bad, rng), ParameterError);
  LaplaceParams neg{0.0, -1.0};
  CHECK_THROWS_AS(sample_laplace(neg, rng), ParameterError);
}

TEST_CASE("edge priorities: empty graph, determinism") {
  Graph empty(4, {});
  CHECK(edge_priorities(empty, 3).empty());
  Graph g = generate_cycle(5);
  CHECK(edge_priorities(g, 9) == edge_priorities(g, 9));
}

TEST_CASE("priority order on three edges is uniform over the six orderings") {
  Graph tri = generate_complete(3);
  std::map<std::vector<EdgeId>, int> counts;
  const int trials = 100000;
  for (int s = 0; s < trials; ++s) {
    EdgePriorityMap pri = edge_priorities(tri, static_cast<std::uint64_t>(s));
    std::vector<std::pair<double, EdgeId>> order;
    for (const auto& [e, p] : pri) order.emplace_back(p, e);
    std::sort(order.begin(), order.end());
    std::vector<EdgeId> perm;
    for (auto& [p, e] : order) perm.push_back(e);
    counts[perm]++;
  }
  CHECK(counts.size() == 6);
  double chi_sq = 0.0;
  for (const auto& [perm, c] : counts) {
    double expected = trials / 6.0;
    CHECK(std::abs(c / double(trials) - 1.0 / 6.0) < 0.01);
    chi_sq += (c - expected) * (c - expected) / expected;
  }
  CHECK(chi_sq < 20.5);  // df = 5 at p ~ 0.001
}

TEST_CASE("priorities restrict pointwise to subgraphs") {
  Graph g = testutil::random_graph(10, 0.4, 21);
  EdgePriorityMap full = edge_priorities(g, 77);
  Graph h = g.remove_edge(g.edges()[0]);
  EdgePriorityMap sub = edge_priorities(h, 77);
  for (const EdgeId& e : h.edges()) {
    CHECK(full.at(e) == sub.at(e));
  }
}
