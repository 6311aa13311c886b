#pragma once

#include <cstdint>
#include <vector>

#include "stablegraphs/metrics.hpp"
#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// One side of a cut (proper nonempty vertex subset) with its crossing-edge
/// count. A set and its complement are distinct solutions.
struct CutSolution {
  Solution side;           // VertexSet, proper and nonempty
  std::uint32_t cost = 0;  // |{e : exactly one endpoint in side}|
};

std::uint32_t cut_cost(const Graph& g, const std::vector<char>& in_side);

/// Global minimum cut value (Stoer-Wagner); 0 iff disconnected. n >= 2.
std::uint32_t min_cut_value(const Graph& g);

struct EnumeratedCuts {
  std::vector<CutSolution> cuts;
  bool exhaustive = true;  // contraction-based enumeration is best-effort
};

/// Every vertex set S with cost(G,S) <= threshold, both orientations listed.
/// Exhaustive over all bipartitions for n <= 20; randomized contraction with
/// Karger-style repetition counts beyond that. threshold must be >= OPT.
EnumeratedCuts enumerate_small_cuts(const Graph& g, double threshold, std::uint64_t seed);

/// The exponential-mechanism cut sampler: enumerate cuts of cost at most
/// (2+7 eps) OPT + 2 eps and sample one with probability proportional to
/// exp(-alpha cost), alpha = (2 + 1/eps) ln(n) / OPT. When OPT = 0 a
/// uniformly random zero-cost cut is returned.
CutSolution stable_min_cut(const Graph& g, double eps, std::uint64_t seed);

/// Exact output law of stable_min_cut (support = enumerated cuts).
ExactDistribution stable_min_cut_distribution(const Graph& g, double eps);

/// Exact Gibbs distribution over all 2^n - 2 proper vertex subsets with
/// probability proportional to exp(-alpha cost). Brute force; n <= 16.
ExactDistribution gibbs_cut_oracle(const Graph& g, double alpha);

/// log of sum over all proper subsets S of exp(-alpha cost(G,S)); n <= 20.
double log_gibbs_normalizer(const Graph& g, double alpha);
/// Same sum restricted to cost(G,S) <= threshold.
double log_truncated_normalizer(const Graph& g, double alpha, double threshold);

}  // namespace stablegraphs
