#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "stablegraphs/graph.hpp"
#include "stablegraphs/metrics.hpp"
#include "stablegraphs/rng.hpp"
#include "stablegraphs/solution.hpp"

namespace testutil {

using namespace stablegraphs;

// ---- independent brute-force oracles (never call the code paths they check)

inline std::size_t brute_max_matching_size(const Graph& g) {
  const auto& edges = g.edges();
  std::size_t best = 0;
  std::vector<char> used(g.n(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t size) {
    best = std::max(best, size);
    if (idx == edges.size()) return;
    // prune: even taking every remaining edge cannot reach best
    if (size + (edges.size() - idx) <= best) return;
    rec(idx + 1, size);
    const EdgeId& e = edges[idx];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      rec(idx + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
  };
  rec(0, 0);
  return best;
}

inline std::uint32_t brute_cut_cost(const Graph& g, std::uint64_t mask) {
  std::uint32_t c = 0;
  for (const EdgeId& e : g.edges()) {
    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) ++c;
  }
  return c;
}

inline std::uint32_t brute_min_cut_value(const Graph& g) {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::uint64_t mask = 1; mask + 1 < (1ULL << g.n()); ++mask) {
    best = std::min(best, brute_cut_cost(g, mask));
  }
  return best;
}

inline std::size_t brute_min_vertex_cover_size(const Graph& g) {
  std::size_t best = g.n();
  for (std::uint64_t mask = 0; mask < (1ULL << g.n()); ++mask) {
    bool covers = true;
    for (const EdgeId& e : g.edges()) {
      if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::min<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

/// Minimum spanning forest weight by exhaustive subset enumeration (n <= 8).
inline double brute_msf_weight(const Graph& g) {
  const std::size_t need = g.n() - g.component_count();
  const std::size_t m = g.m();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> pick(need);
  std::function<void(std::size_t, std::size_t, double)> rec = [&](std::size_t start,
                                                                  std::size_t chosen, double w) {
    if (chosen == need) {
      // acyclic check via union-find
      std::vector<std::size_t> parent(g.n());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::size_t i = 0; i < need; ++i) {
        const EdgeId& e = g.edges()[pick[i]];
        std::size_t a = find(e.u), b = find(e.v);
        if (a == b) return;
        parent[a] = b;
      }
      best = std::min(best, w);
      return;
    }
    for (std::size_t i = start; i + (need - chosen - 1) < m; ++i) {
      pick[chosen] = i;
      rec(i + 1, chosen + 1, w + g.weight_at(i));
    }
  };
  if (need == 0) return 0.0;
  rec(0, 0, 0.0);
  return best;
}

/// Minimum-cost perfect assignment by permutation enumeration (n <= 8).
inline double brute_assignment(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += cost[i][perm[i]];
    best = std::min(best, acc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ---- random inputs

inline Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  return generate_erdos_renyi(n, p, seed);
}

inline Graph with_random_weights(const Graph& g, std::uint64_t seed, bool integer_ties) {
  Rng rng(seed);
  std::vector<double> ws(g.m());
  for (double& w : ws) {
    w = integer_ties ? static_cast<double>(1 + rng.below(4)) : rng.uniform01();
  }
  return Graph(g.n(), g.edges(), ws);
}

inline Solution solution_of_mask_vertices(std::uint64_t mask, std::uint32_t n) {
  std::vector<VertexId> vs;
  for (std::uint32_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1) vs.push_back(v);
  }
  return Solution::vertex_set(std::move(vs));
}

/// Draws one solution from an exact distribution (inverse CDF).
inline Solution sample_from(const ExactDistribution& d, Rng& rng) {
  double u = rng.uniform01();
  double acc = 0.0;
  for (const auto& [sol, p] : d.support()) {
    acc += p;
    if (u < acc) return sol;
  }
  return d.support().back().first;
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace testutil
