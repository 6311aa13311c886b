#include "stablegraphs/vertexcover.hpp"

#include <cmath>

#include "stablegraphs/matching.hpp"
#include "stablegraphs/rng.hpp"

namespace stablegraphs {

bool is_vertex_cover(const Graph& g, const Solution& s) {
  for (VertexId v : s.vertices()) {
    if (v >= g.n()) throw ValidationError("vertex id " + std::to_string(v) + " out of range");
  }
  for (const EdgeId& e : g.edges()) {
    if (!s.contains(e.u) && !s.contains(e.v)) return false;
  }
  return true;
}

Solution stable_vc_via_matching(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  StableMatchingRun run = stable_half_matching_run(g, eps / 2.0, seed);
  std::vector<VertexId> cover = run.removed;
  for (const EdgeId& e : run.matching.edges()) {
    cover.push_back(e.u);
    cover.push_back(e.v);
  }
  return Solution::vertex_set(std::move(cover));
}

VcSamplingRun stable_vc_sampling_run(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0)) throw ParameterError("eps must be >= 0");
  const std::uint32_t n = g.n();
  const double m = static_cast<double>(g.m());
  VcSamplingRun out;
  out.assumption_violated = static_cast<double>(n) > std::pow(std::max(m, 1.0), 1.0 + eps);
  if (n == 0) {
    out.cover = Solution::vertex_set({});
    return out;
  }

  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> degree(n, 0);
  for (const EdgeId& e : g.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }

  Rng rng(stable_hash(seed, {0x76637361ULL}));
  std::vector<VertexId> cover;
  const double m_pow = std::pow(m, 1.0 + eps);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const double w = 2.0 * m_pow / static_cast<double>(n - i + 1);
    double total = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v]) total += static_cast<double>(degree[v]) + w;
    }
    VertexId pick = n;
    if (total > 0.0) {
      double u = rng.uniform01() * total;
      double acc = 0.0;
      for (VertexId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        acc += static_cast<double>(degree[v]) + w;
        if (u < acc) {
          pick = v;
          break;
        }
      }
    }
    if (pick == n) {  // all-zero weights (m = 0); order is immaterial
      for (VertexId v = 0; v < n; ++v) {
        if (alive[v]) {
          pick = v;
          break;
        }
      }
    }
    if (degree[pick] >= 1) cover.push_back(pick);
    alive[pick] = 0;
    for (VertexId w2 : g.neighbors(pick)) {
      if (alive[w2]) --degree[w2];
    }
    degree[pick] = 0;
  }
  out.cover = Solution::vertex_set(std::move(cover));
  return out;
}

Solution stable_vc_sampling(const Graph& g, double eps, std::uint64_t seed) {
  return stable_vc_sampling_run(g, eps, seed).cover;
}

}  // namespace stablegraphs
