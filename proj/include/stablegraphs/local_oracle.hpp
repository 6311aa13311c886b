#pragma once

#include <cstdint>
#include <functional>
#include <unordered_set>

#include "stablegraphs/priorities.hpp"

namespace stablegraphs {

/// Edge probes issued by one oracle call: the distinct edges touched plus a
/// raw attempt count (memoized edges still count once per attempt).
struct QueryLog {
  std::unordered_set<EdgeId, EdgeIdHash> queried_edges;
  long long count = 0;

  void probe(EdgeId e) {
    ++count;
    queried_edges.insert(e);
  }
};

/// Answers whether e is in randomized_greedy_matching(g, priorities) by
/// recursing only into adjacent edges of smaller (priority, EdgeId), memoized
/// within the call. Priorities strictly decrease along the recursion, so it
/// terminates.
bool greedy_match_oracle(const Graph& g, EdgeId e, const EdgePriorityMap& priorities,
                         QueryLog& log);

/// Oracle for the degree-thresholded greedy: answers false after at most
/// 2x - 2 adjacency probes when an endpoint of e has degree >= x in g (a dead
/// edge), otherwise simulates the greedy oracle on the alive subgraph.
bool thresholded_oracle(const Graph& g, EdgeId e, double x, const EdgePriorityMap& priorities,
                        QueryLog& log);

using OracleFn =
    std::function<bool(const Graph&, EdgeId, const EdgePriorityMap&, QueryLog&)>;

struct QueryComplexityStats {
  double mean = 0.0;        // over all (edge, seed) pairs
  double stddev = 0.0;      // sample standard deviation of per-call counts
  std::size_t calls = 0;
  std::vector<double> per_edge_mean;  // indexed like g.edges()
};

/// Average query count of an oracle over all edges of g and n_seeds priority
/// draws.
QueryComplexityStats mean_query_complexity(const OracleFn& oracle, const Graph& g,
                                           std::size_t n_seeds, std::uint64_t base_seed);

}  // namespace stablegraphs
