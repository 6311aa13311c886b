#include "stablegraphs/local_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace stablegraphs {

namespace {

using Key = std::pair<double, EdgeId>;

Key key_of(const EdgePriorityMap& priorities, EdgeId e) {
  return {priority_of(priorities, e), e};
}

/// Shared recursion. alive_edge filters the graph the greedy runs on (used by
/// the thresholded variant); probes are charged to the log at each attempt.
class GreedyOracle {
 public:
  GreedyOracle(const Graph& g, const EdgePriorityMap& priorities, QueryLog& log,
               std::function<bool(EdgeId)> alive_edge)
      : g_(g), priorities_(priorities), log_(log), alive_edge_(std::move(alive_edge)) {}

  bool matched(EdgeId e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    Key my_key = key_of(priorities_, e);

    std::vector<std::pair<Key, EdgeId>> smaller;
    for (VertexId tip : {e.u, e.v}) {
      for (VertexId w : g_.neighbors(tip)) {
        EdgeId a(tip, w);
        if (a == e) continue;
        Key k = key_of(priorities_, a);
        if (k < my_key) smaller.emplace_back(k, a);
      }
    }
    std::sort(smaller.begin(), smaller.end());

    bool result = true;
    for (const auto& [k, a] : smaller) {
      log_.probe(a);
      if (alive_edge_ && !alive_edge_(a)) continue;
      if (matched(a)) {
        result = false;
        break;
      }
    }
    memo_.emplace(e, result);
    return result;
  }

 private:
  const Graph& g_;
  const EdgePriorityMap& priorities_;
  QueryLog& log_;
  std::function<bool(EdgeId)> alive_edge_;
  std::unordered_map<EdgeId, bool, EdgeIdHash> memo_;
};

}  // namespace

bool greedy_match_oracle(const Graph& g, EdgeId e, const EdgePriorityMap& priorities,
                         QueryLog& log) {
  if (!g.has_edge(e)) {
    throw ValidationError("oracle query for edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") not in graph");
  }
  GreedyOracle oracle(g, priorities, log, nullptr);
  return oracle.matched(e);
}

bool thresholded_oracle(const Graph& g, EdgeId e, double x, const EdgePriorityMap& priorities,
                        QueryLog& log) {
  if (!g.has_edge(e)) {
    throw ValidationError("oracle query for edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") not in graph");
  }

  // deg(v) >= x  <=>  at least ceil(x) - 1 incident edges besides the probed
  // one; nonpositive x kills every vertex.
  const double others_needed = std::ceil(x) - 1.0;
  std::unordered_map<VertexId, bool> high_memo;
  auto vertex_high = [&](VertexId v, VertexId partner) {
    auto it = high_memo.find(v);
    if (it != high_memo.end()) return it->second;
    bool high;
    if (others_needed <= 0.0) {
      high = true;  // any endpoint has degree >= 1 >= x
    } else {
      long long found = 0;
      high = false;
      for (VertexId w : g.neighbors(v)) {
        if (w == partner) continue;
        log.probe(EdgeId(v, w));
        ++found;
        if (static_cast<double>(found) >= others_needed) {
          high = true;
          break;
        }
      }
    }
    high_memo.emplace(v, high);
    return high;
  };

  auto edge_alive = [&](EdgeId a) { return !vertex_high(a.u, a.v) && !vertex_high(a.v, a.u); };

  if (!edge_alive(e)) return false;
  GreedyOracle oracle(g, priorities, log, edge_alive);
  return oracle.matched(e);
}

QueryComplexityStats mean_query_complexity(const OracleFn& oracle, const Graph& g,
                                           std::size_t n_seeds, std::uint64_t base_seed) {
  if (g.m() == 0) throw ParameterError("query complexity needs m >= 1");
  QueryComplexityStats stats;
  stats.per_edge_mean.assign(g.m(), 0.0);
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t s = 0; s < n_seeds; ++s) {
    EdgePriorityMap priorities = edge_priorities(g, stable_hash(base_seed, {0x6f726163ULL, s}));
    for (std::size_t i = 0; i < g.m(); ++i) {
      QueryLog log;
      oracle(g, g.edges()[i], priorities, log);
      double c = static_cast<double>(log.count);
      stats.per_edge_mean[i] += c;
      sum += c;
      sum_sq += c * c;
      ++stats.calls;
    }
  }
  for (double& v : stats.per_edge_mean) v /= static_cast<double>(n_seeds);
  const double denom = static_cast<double>(stats.calls);
  stats.mean = sum / denom;
  if (stats.calls > 1) {
    double var = (sum_sq - sum * sum / denom) / (denom - 1.0);
    stats.stddev = std::sqrt(std::max(0.0, var));
  }
  return stats;
}

}  // namespace stablegraphs
