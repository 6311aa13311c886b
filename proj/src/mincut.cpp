#include "stablegraphs/mincut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "stablegraphs/rng.hpp"

namespace stablegraphs {

namespace {

constexpr std::uint64_t kTagKarger = 0x6b617267ULL;
constexpr std::uint64_t kTagCutPick = 0x63757470ULL;

std::vector<VertexId> side_vertices(std::uint32_t n, std::uint64_t mask) {
  std::vector<VertexId> side;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (mask & (1ULL << v)) side.push_back(v);
  }
  return side;
}

std::uint32_t mask_cut_cost(const Graph& g, std::uint64_t mask) {
  std::uint32_t cost = 0;
  for (const EdgeId& e : g.edges()) {
    bool cu = (mask >> e.u) & 1ULL;
    bool cv = (mask >> e.v) & 1ULL;
    cost += (cu != cv) ? 1 : 0;
  }
  return cost;
}

}  // namespace

std::uint32_t cut_cost(const Graph& g, const std::vector<char>& in_side) {
  std::uint32_t cost = 0;
  for (const EdgeId& e : g.edges()) {
    if ((in_side[e.u] != 0) != (in_side[e.v] != 0)) ++cost;
  }
  return cost;
}

std::uint32_t min_cut_value(const Graph& g) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ParameterError("min cut requires n >= 2");

  // Stoer-Wagner over an adjacency matrix of unit edge weights.
  std::vector<std::vector<std::uint32_t>> w(n, std::vector<std::uint32_t>(n, 0));
  for (const EdgeId& e : g.edges()) {
    w[e.u][e.v] += 1;
    w[e.v][e.u] += 1;
  }
  std::vector<std::uint32_t> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);

  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  while (vertices.size() > 1) {
    std::size_t count = vertices.size();
    std::vector<std::uint32_t> weight_to_a(count, 0);
    std::vector<char> added(count, 0);
    std::size_t prev = 0, last = 0;
    for (std::size_t it = 0; it < count; ++it) {
      std::size_t pick = count;
      for (std::size_t i = 0; i < count; ++i) {
        if (!added[i] && (pick == count || weight_to_a[i] > weight_to_a[pick])) pick = i;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (std::size_t i = 0; i < count; ++i) {
        if (!added[i]) weight_to_a[i] += w[vertices[pick]][vertices[i]];
      }
    }
    best = std::min(best, weight_to_a[last]);
    // merge last into prev
    std::uint32_t a = vertices[prev], b = vertices[last];
    for (std::uint32_t x : vertices) {
      if (x == a || x == b) continue;
      w[a][x] += w[b][x];
      w[x][a] = w[a][x];
    }
    vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return best;
}

EnumeratedCuts enumerate_small_cuts(const Graph& g, double threshold, std::uint64_t seed) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ParameterError("cut enumeration requires n >= 2");
  const std::uint32_t opt = min_cut_value(g);
  if (threshold < static_cast<double>(opt)) {
    throw ParameterError("cut threshold " + std::to_string(threshold) + " below OPT " +
                         std::to_string(opt));
  }

  EnumeratedCuts out;
  if (n <= 20) {
    // unordered bipartitions: subsets not containing vertex 0, expanded to
    // both orientations
    const std::uint64_t full = (1ULL << n) - 1;
    for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
      std::uint64_t s = mask << 1;  // vertex 0 stays out
      std::uint32_t cost = mask_cut_cost(g, s);
      if (static_cast<double>(cost) <= threshold) {
        out.cuts.push_back({Solution::vertex_set(side_vertices(n, s)), cost});
        out.cuts.push_back({Solution::vertex_set(side_vertices(n, full & ~s)), cost});
      }
    }
    out.exhaustive = true;
    return out;
  }

  std::map<std::vector<VertexId>, std::uint32_t> found;

  if (opt == 0) {
    // zero-cost cuts are exactly the nontrivial unions of connected
    // components; contraction runs cannot be relied on to reach them
    std::vector<std::uint32_t> comp(n, 0);
    std::uint32_t comps = 0;
    std::vector<VertexId> stack;
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++comps;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        comp[v] = comps - 1;
        for (VertexId w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    if (comps > 20) throw CapacityError("too many components for zero-cut enumeration");
    for (std::uint64_t cmask = 1; cmask + 1 < (1ULL << comps); ++cmask) {
      // canonical orientation excludes component 0 (same as the contraction
      // path); both orientations are expanded at the end
      if (cmask & 1ULL) continue;
      std::vector<VertexId> side;
      for (VertexId v = 0; v < n; ++v) {
        if ((cmask >> comp[v]) & 1ULL) side.push_back(v);
      }
      found.emplace(std::move(side), 0);
    }
  }

  // Karger contraction, repeated enough times that a cut of cost <= threshold
  // survives some run with probability >= 1 - 1/n.
  const double alpha = threshold / std::max<double>(opt, 1.0);
  double reps_d = std::ceil(2.0 * std::pow(static_cast<double>(n), 2.0 * alpha) *
                            std::log(static_cast<double>(n)));
  const std::size_t kMaxReps = 2000000;
  std::size_t reps = kMaxReps;
  out.exhaustive = false;
  if (reps_d < static_cast<double>(kMaxReps)) reps = static_cast<std::size_t>(reps_d);

  Rng rng(stable_hash(seed, {kTagKarger, n}));
  std::vector<std::uint32_t> parent(n);
  for (std::size_t rep = 0; rep < reps; ++rep) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    std::uint32_t components = n;
    std::vector<std::size_t> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (std::size_t idx : order) {
      if (components == 2) break;
      const EdgeId& e = g.edges()[idx];
      std::uint32_t ru = find(e.u), rv = find(e.v);
      if (ru == rv) continue;
      parent[ru] = rv;
      --components;
    }
    if (components != 2) continue;  // disconnected graph; zero-cost cuts come from components
    std::uint32_t root0 = find(0);
    std::vector<char> in_side(n, 0);
    std::vector<VertexId> side;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (find(v) != root0) {
        in_side[v] = 1;
        side.push_back(v);
      }
    }
    std::uint32_t cost = cut_cost(g, in_side);
    if (static_cast<double>(cost) <= threshold) found.emplace(std::move(side), cost);
  }
  for (auto& [side, cost] : found) {
    std::vector<VertexId> complement;
    std::vector<char> member(n, 0);
    for (VertexId v : side) member[v] = 1;
    for (VertexId v = 0; v < n; ++v) {
      if (!member[v]) complement.push_back(v);
    }
    out.cuts.push_back({Solution::vertex_set(side), cost});
    out.cuts.push_back({Solution::vertex_set(std::move(complement)), cost});
  }
  return out;
}

namespace {

struct WeightedCuts {
  EnumeratedCuts enumerated;
  std::vector<double> probabilities;  // parallel to enumerated.cuts
};

WeightedCuts alg1_weighted_cuts(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  const std::uint32_t opt = min_cut_value(g);
  WeightedCuts out;
  if (opt == 0) {
    out.enumerated = enumerate_small_cuts(g, 0.0, seed);
    out.probabilities.assign(out.enumerated.cuts.size(),
                             1.0 / static_cast<double>(out.enumerated.cuts.size()));
    return out;
  }
  const double alpha = (2.0 + 1.0 / eps) * std::log(static_cast<double>(g.n())) / opt;
  const double threshold = (2.0 + 7.0 * eps) * opt + 2.0 * eps;
  out.enumerated = enumerate_small_cuts(g, threshold, seed);
  std::uint32_t min_cost = opt;
  double total = 0.0;
  out.probabilities.reserve(out.enumerated.cuts.size());
  for (const CutSolution& c : out.enumerated.cuts) {
    double w = std::exp(-alpha * (static_cast<double>(c.cost) - min_cost));
    out.probabilities.push_back(w);
    total += w;
  }
  for (double& p : out.probabilities) p /= total;
  return out;
}

}  // namespace

CutSolution stable_min_cut(const Graph& g, double eps, std::uint64_t seed) {
  WeightedCuts wc = alg1_weighted_cuts(g, eps, seed);
  Rng rng(stable_hash(seed, {kTagCutPick}));
  double u = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < wc.probabilities.size(); ++i) {
    acc += wc.probabilities[i];
    if (u < acc) return wc.enumerated.cuts[i];
  }
  return wc.enumerated.cuts.back();
}

ExactDistribution stable_min_cut_distribution(const Graph& g, double eps) {
  WeightedCuts wc = alg1_weighted_cuts(g, eps, 0);
  std::vector<std::pair<Solution, double>> support;
  support.reserve(wc.enumerated.cuts.size());
  for (std::size_t i = 0; i < wc.enumerated.cuts.size(); ++i) {
    support.emplace_back(wc.enumerated.cuts[i].side, wc.probabilities[i]);
  }
  return ExactDistribution(std::move(support));
}

ExactDistribution gibbs_cut_oracle(const Graph& g, double alpha) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ParameterError("Gibbs oracle requires n >= 2");
  if (n > 16) throw CapacityError("Gibbs oracle brute force capped at n <= 16");
  const std::uint64_t total_masks = (1ULL << n) - 1;
  std::uint32_t min_cost = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> costs(total_masks + 1, 0);
  for (std::uint64_t mask = 1; mask < total_masks; ++mask) {
    costs[mask] = mask_cut_cost(g, mask);
    min_cost = std::min(min_cost, costs[mask]);
  }
  double total = 0.0;
  std::vector<std::pair<Solution, double>> support;
  support.reserve(total_masks - 1);
  for (std::uint64_t mask = 1; mask < total_masks; ++mask) {
    double w = std::exp(-alpha * (static_cast<double>(costs[mask]) - min_cost));
    support.emplace_back(Solution::vertex_set(side_vertices(n, mask)), w);
    total += w;
  }
  for (auto& [sol, p] : support) p /= total;
  return ExactDistribution(std::move(support));
}

namespace {

double log_sum_exp_over_masks(const Graph& g, double alpha, double cost_cap) {
  const std::uint32_t n = g.n();
  if (n < 2) throw ParameterError("normalizer requires n >= 2");
  if (n > 20) throw CapacityError("normalizer brute force capped at n <= 20");
  const std::uint64_t total_masks = (1ULL << n) - 1;
  double max_exponent = -std::numeric_limits<double>::infinity();
  std::vector<double> exponents;
  exponents.reserve(total_masks - 1);
  for (std::uint64_t mask = 1; mask < total_masks; ++mask) {
    double cost = mask_cut_cost(g, mask);
    if (cost > cost_cap) continue;
    double e = -alpha * cost;
    exponents.push_back(e);
    max_exponent = std::max(max_exponent, e);
  }
  if (exponents.empty()) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (double e : exponents) acc += std::exp(e - max_exponent);
  return max_exponent + std::log(acc);
}

}  // namespace

double log_gibbs_normalizer(const Graph& g, double alpha) {
  return log_sum_exp_over_masks(g, alpha, std::numeric_limits<double>::infinity());
}

double log_truncated_normalizer(const Graph& g, double alpha, double threshold) {
  return log_sum_exp_over_masks(g, alpha, threshold);
}

}  // namespace stablegraphs
