#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stablegraphs/priorities.hpp"
#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// True iff s is an edge set of g whose members are pairwise vertex-disjoint.
bool is_matching(const Graph& g, const Solution& s);

/// Maximum-cardinality matching in a general graph (blossom contraction).
Solution maximum_matching(const Graph& g);
std::size_t maximum_matching_size(const Graph& g);

/// Among all maximum matchings, the one whose sorted edge sequence is
/// lexicographically smallest. Built by forcing edges in canonical order,
/// each feasibility test a warm-started matching computation.
Solution lex_min_maximum_matching(const Graph& g);

/// Maximal matching from scanning edges in increasing (priority, EdgeId)
/// order. Priorities must cover every edge of g.
Solution randomized_greedy_matching(const Graph& g, const EdgePriorityMap& priorities);

/// tau is the threshold location, delta the relative scale; the Laplace draw
/// uses Lap(tau, delta * tau).
struct ThresholdConfig {
  double tau = 0.0;
  double delta = 0.0;
  LaplaceParams laplace() const;
};

struct ThresholdedRun {
  Solution matching;
  std::vector<VertexId> removed;  // vertices deleted by the degree threshold
  double threshold = 0.0;         // the Laplace draw L
};

/// Sample L ~ Lap(tau, delta*tau), delete every vertex of degree >= L (all of
/// them when L <= 0), then run the inner matching algorithm on what remains.
ThresholdedRun threshold_wrap(const std::function<Solution(const Graph&, std::uint64_t)>& inner,
                              const Graph& g, const ThresholdConfig& cfg, std::uint64_t seed);

/// One run of a stable matching construction with enough introspection for
/// the vertex-cover reduction and the composition experiments.
struct StableMatchingRun {
  Solution matching;
  std::vector<VertexId> removed;
  std::string branch;  // "guard-max" | "lex" | "aeps-guard" | "threshold"
  double threshold = 0.0;
};

/// Degree-thresholded randomized greedy with the small-instance guard
/// (outputs the lexicographic maximum matching when OPT <= 1/eps + 1 or
/// m <= 1/(2 eps)); otherwise tau = m / (eps' * OPT) with
/// eps' = eps - 1/(2 OPT) and delta = 1 / (2 ln n).
StableMatchingRun threshold_greedy_run(const Graph& g, double eps, std::uint64_t seed);
Solution threshold_greedy_matching(const Graph& g, double eps, std::uint64_t seed);

/// The combined (1/2 - eps)-approximation: guard branch below OPT 5 / m 6,
/// else lexicographic with probability g/(f+g) for f = OPT^2/m and
/// g = (eps/(1-eps)) ln n + m^3/(eps^3 OPT^3), else the thresholded greedy.
StableMatchingRun stable_half_matching_run(const Graph& g, double eps, std::uint64_t seed);
Solution stable_half_matching(const Graph& g, double eps, std::uint64_t seed);

/// k = ceil(1/eps - 1) rounds of exhaustive augmenting-path search; round i
/// flips a random maximal vertex-disjoint set of augmenting paths of length
/// 2i - 1.
Solution greedy_augmenting_matching(const Graph& g, double eps, std::uint64_t seed);

/// Degree-thresholded augmenting-paths algorithm with guards
/// (OPT <= 2/eps + 1 or m <= 1/(3 eps)); inner parameter eps' = eps/3 - 1/(3 OPT).
StableMatchingRun threshold_augmenting_run(const Graph& g, double eps, std::uint64_t seed);
Solution threshold_augmenting_matching(const Graph& g, double eps, std::uint64_t seed);

/// The combined (1 - eps)-approximation with c = k^2, k = ceil(1/eps - 1):
/// guard below OPT/m < 2c, else mixture of lexicographic and thresholded
/// augmenting with g = (eps/(1-eps)) ln n + (m/(eps^3 OPT))^c.
StableMatchingRun stable_one_minus_eps_matching_run(const Graph& g, double eps, std::uint64_t seed);
Solution stable_one_minus_eps_matching(const Graph& g, double eps, std::uint64_t seed);

/// Mixture weight ingredients of the combined algorithms (exposed for the
/// Lipschitz checks and the parallel-composition experiment).
double mixture_f(const Graph& g);                              // OPT^2 / m
double mixture_g_half(const Graph& g, double eps);             // (eps/(1-eps)) ln n + m^3/(eps^3 OPT^3)
double mixture_g_one_minus_eps(const Graph& g, double eps);    // (eps/(1-eps)) ln n + (m/(eps^3 OPT))^c

}  // namespace stablegraphs
