#include "stablegraphs/matching.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace stablegraphs {

namespace {

constexpr std::uint64_t kTagThresholdDraw = 0x4c617001ULL;
constexpr std::uint64_t kTagThresholdInner = 0x4c617002ULL;
constexpr std::uint64_t kTagAeps = 0x4c617003ULL;
constexpr std::uint64_t kTagMixBranch = 0x4c617004ULL;
constexpr std::uint64_t kTagDelegate = 0x4c617005ULL;
constexpr std::uint64_t kTagAugment = 0x4c617006ULL;

/// Edmonds blossom matcher over a fixed adjacency, with a vertex mask and a
/// warm-start matching. One pass of augmentation attempts from free vertices
/// yields a maximum matching (augmenting never creates augmenting paths from
/// vertices that had none).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : n_(g.n()), adj_(g.n()) {
    for (const EdgeId& e : g.edges()) {
      adj_[e.u].push_back(static_cast<int>(e.v));
      adj_[e.v].push_back(static_cast<int>(e.u));
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  /// match[v] = partner or -1; only vertices with alive[v] participate.
  /// Returns the matching size (edge count).
  std::size_t solve(std::vector<int>& match, const std::vector<char>& alive) {
    match_ = &match;
    alive_ = &alive;
    base_.resize(n_);
    std::size_t matched_vertices = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (alive[v] && match[v] >= 0) ++matched_vertices;
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (!alive[v] || match[v] >= 0) continue;
      for (int to : adj_[v]) {
        if (alive[to] && match[to] < 0) {
          match[v] = to;
          match[to] = static_cast<int>(v);
          matched_vertices += 2;
          break;
        }
      }
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (alive[v] && match[v] < 0 && try_augment(static_cast<int>(v))) matched_vertices += 2;
    }
    return matched_vertices / 2;
  }

 private:
  bool try_augment(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    for (std::uint32_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
    used_[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : adj_[v]) {
        if (!(*alive_)[to]) continue;
        if (base_[v] == base_[to] || (*match_)[v] == to) continue;
        if (to == root || ((*match_)[to] != -1 && p_[(*match_)[to]] != -1)) {
          // odd cycle: contract the blossom up to the common base
          int cur_base = lowest_common_base(v, to);
          std::vector<char> in_blossom(n_, 0);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (std::uint32_t i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<int>(i));
              }
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if ((*match_)[to] == -1) {
            augment_along(to);
            return true;
          }
          used_[(*match_)[to]] = 1;
          queue.push_back((*match_)[to]);
        }
      }
    }
    return false;
  }

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    int cur = a;
    for (;;) {
      cur = base_[cur];
      seen[cur] = 1;
      if ((*match_)[cur] == -1) break;
      cur = p_[(*match_)[cur]];
    }
    cur = b;
    for (;;) {
      cur = base_[cur];
      if (seen[cur]) return cur;
      cur = p_[(*match_)[cur]];
    }
  }

  void mark_path(int v, int target_base, int child, std::vector<char>& in_blossom) {
    while (base_[v] != target_base) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[(*match_)[v]]] = 1;
      p_[v] = child;
      child = (*match_)[v];
      v = p_[(*match_)[v]];
    }
  }

  void augment_along(int v) {
    while (v != -1) {
      int pv = p_[v], next = (*match_)[pv];
      (*match_)[v] = pv;
      (*match_)[pv] = v;
      v = next;
    }
  }

  std::uint32_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int>* match_ = nullptr;
  const std::vector<char>* alive_ = nullptr;
  std::vector<int> p_, base_;
  std::vector<char> used_;
};

Solution matching_from_partners(const std::vector<int>& match) {
  std::vector<EdgeId> edges;
  for (std::uint32_t v = 0; v < match.size(); ++v) {
    if (match[v] >= 0 && static_cast<std::uint32_t>(match[v]) > v) {
      edges.emplace_back(v, static_cast<VertexId>(match[v]));
    }
  }
  return Solution::edge_set(std::move(edges));
}

double ln_n(const Graph& g) { return std::log(static_cast<double>(g.n())); }

}  // namespace

bool is_matching(const Graph& g, const Solution& s) {
  if (s.kind() != SolutionKind::EdgeSet) return false;
  std::vector<char> touched(g.n(), 0);
  for (const EdgeId& e : s.edges()) {
    if (!g.has_edge(e)) return false;
    if (touched[e.u] || touched[e.v]) return false;
    touched[e.u] = touched[e.v] = 1;
  }
  return true;
}

Solution maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g);
  std::vector<int> match(g.n(), -1);
  std::vector<char> alive(g.n(), 1);
  matcher.solve(match, alive);
  return matching_from_partners(match);
}

std::size_t maximum_matching_size(const Graph& g) {
  BlossomMatcher matcher(g);
  std::vector<int> match(g.n(), -1);
  std::vector<char> alive(g.n(), 1);
  return matcher.solve(match, alive);
}

Solution lex_min_maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g);
  std::vector<int> match(g.n(), -1);
  std::vector<char> alive(g.n(), 1);
  const std::size_t target = matcher.solve(match, alive);

  std::vector<EdgeId> forced;
  std::size_t remaining = target;  // maximum matching size of g minus forced endpoints
  for (const EdgeId& e : g.edges()) {
    if (forced.size() == target) break;
    if (!alive[e.u] || !alive[e.v]) continue;
    // e is forceable iff removing its endpoints costs exactly one matching edge
    std::vector<char> alive2 = alive;
    alive2[e.u] = alive2[e.v] = 0;
    std::vector<int> match2 = match;
    for (VertexId w : {e.u, e.v}) {
      if (match2[w] >= 0) {
        match2[match2[w]] = -1;
        match2[w] = -1;
      }
    }
    std::size_t got = matcher.solve(match2, alive2);
    if (got == remaining - 1) {
      forced.push_back(e);
      alive = std::move(alive2);
      match = std::move(match2);
      remaining = got;
    }
  }
  return Solution::edge_set(std::move(forced));
}

Solution randomized_greedy_matching(const Graph& g, const EdgePriorityMap& priorities) {
  std::vector<std::pair<double, EdgeId>> order;
  order.reserve(g.m());
  for (const EdgeId& e : g.edges()) order.emplace_back(priority_of(priorities, e), e);
  std::sort(order.begin(), order.end());
  std::vector<char> matched(g.n(), 0);
  std::vector<EdgeId> out;
  for (const auto& [pri, e] : order) {
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = 1;
      out.push_back(e);
    }
  }
  return Solution::edge_set(std::move(out));
}

LaplaceParams ThresholdConfig::laplace() const {
  if (!(tau > 0.0) || !(delta > 0.0)) throw ParameterError("threshold config requires tau, delta > 0");
  return LaplaceParams{tau, delta * tau};
}

ThresholdedRun threshold_wrap(const std::function<Solution(const Graph&, std::uint64_t)>& inner,
                              const Graph& g, const ThresholdConfig& cfg, std::uint64_t seed) {
  Rng rng(stable_hash(seed, {kTagThresholdDraw}));
  const double threshold = sample_laplace(cfg.laplace(), rng);
  std::vector<bool> mask(g.n(), false);
  std::vector<VertexId> removed;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (threshold <= 0.0 || static_cast<double>(g.degree(v)) >= threshold) {
      mask[v] = true;
      removed.push_back(v);
    }
  }
  if (removed.size() == g.n()) {
    return {Solution::edge_set({}), std::move(removed), threshold};
  }
  Graph sub = g.without_vertices(mask);
  Solution m = inner(sub, stable_hash(seed, {kTagThresholdInner}));
  return {std::move(m), std::move(removed), threshold};
}

namespace {

double half_g_value(std::uint32_t n, double m, double mm, double eps) {
  return eps / (1.0 - eps) * std::log(static_cast<double>(n)) +
         (m * m * m) / (eps * eps * eps * mm * mm * mm);
}

double one_minus_eps_g_value(std::uint32_t n, double m, double mm, double eps, double c) {
  return eps / (1.0 - eps) * std::log(static_cast<double>(n)) +
         std::pow(m / (eps * eps * eps * mm), c);
}

}  // namespace

StableMatchingRun threshold_greedy_run(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  const double mm = static_cast<double>(maximum_matching_size(g));
  const double m = static_cast<double>(g.m());
  if (mm <= 1.0 / eps + 1.0 || m <= 1.0 / (2.0 * eps)) {
    return {lex_min_maximum_matching(g), {}, "aeps-guard", 0.0};
  }
  const double eps_prime = eps - 1.0 / (2.0 * mm);
  ThresholdConfig cfg{m / (eps_prime * mm), 1.0 / (2.0 * ln_n(g))};
  auto inner = [](const Graph& sub, std::uint64_t s) {
    return randomized_greedy_matching(sub, edge_priorities(sub, s));
  };
  ThresholdedRun run = threshold_wrap(inner, g, cfg, stable_hash(seed, {kTagAeps}));
  return {std::move(run.matching), std::move(run.removed), "threshold", run.threshold};
}

Solution threshold_greedy_matching(const Graph& g, double eps, std::uint64_t seed) {
  return threshold_greedy_run(g, eps, seed).matching;
}

StableMatchingRun stable_half_matching_run(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 0.5)) throw ParameterError("eps must lie in (0, 1/2)");
  const std::size_t mm = maximum_matching_size(g);
  if (mm < 5 || g.m() < 6) {
    return {lex_min_maximum_matching(g), {}, "guard-max", 0.0};
  }
  const double m = static_cast<double>(g.m());
  const double f = static_cast<double>(mm) * static_cast<double>(mm) / m;
  const double gv = half_g_value(g.n(), m, static_cast<double>(mm), eps);
  const double rho = gv / (f + gv);
  Rng pick(stable_hash(seed, {kTagMixBranch}));
  if (pick.uniform01() < rho) {
    return {lex_min_maximum_matching(g), {}, "lex", 0.0};
  }
  return threshold_greedy_run(g, eps, stable_hash(seed, {kTagDelegate}));
}

Solution stable_half_matching(const Graph& g, double eps, std::uint64_t seed) {
  return stable_half_matching_run(g, eps, seed).matching;
}

namespace {

/// All augmenting paths of exactly `len` edges for the matching given by
/// partner array `match`, as vertex sequences, deduplicated up to reversal
/// and returned in a deterministic order.
std::vector<std::vector<VertexId>> enumerate_augmenting_paths(const Graph& g,
                                                              const std::vector<int>& match,
                                                              int len) {
  std::set<std::vector<VertexId>> canon;
  std::vector<VertexId> path;
  std::vector<char> in_path(g.n(), 0);

  auto canonical_insert = [&]() {
    std::vector<VertexId> fwd = path;
    std::vector<VertexId> rev(path.rbegin(), path.rend());
    canon.insert(fwd < rev ? std::move(fwd) : std::move(rev));
  };

  std::function<void(VertexId, int)> dfs = [&](VertexId v, int edges_used) {
    if (edges_used == len) {
      if (match[v] == -1) canonical_insert();
      return;
    }
    if (edges_used % 2 == 0) {
      for (VertexId w : g.neighbors(v)) {
        if (in_path[w] || match[v] == static_cast<int>(w)) continue;
        in_path[w] = 1;
        path.push_back(w);
        dfs(w, edges_used + 1);
        path.pop_back();
        in_path[w] = 0;
      }
    } else {
      int w = match[v];
      if (w >= 0 && !in_path[w]) {
        in_path[w] = 1;
        path.push_back(static_cast<VertexId>(w));
        dfs(static_cast<VertexId>(w), edges_used + 1);
        path.pop_back();
        in_path[w] = 0;
      }
    }
  };

  for (VertexId s = 0; s < g.n(); ++s) {
    if (match[s] != -1) continue;
    in_path[s] = 1;
    path.push_back(s);
    dfs(s, 0);
    path.pop_back();
    in_path[s] = 0;
  }
  return {canon.begin(), canon.end()};
}

}  // namespace

Solution greedy_augmenting_matching(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  const int rounds = static_cast<int>(std::ceil(1.0 / eps - 1.0));
  std::vector<int> match(g.n(), -1);
  Rng rng(stable_hash(seed, {kTagAugment}));
  for (int i = 1; i <= rounds; ++i) {
    auto paths = enumerate_augmenting_paths(g, match, 2 * i - 1);
    rng.shuffle(paths);
    std::vector<char> used(g.n(), 0);
    for (const auto& p : paths) {
      bool disjoint = true;
      for (VertexId v : p) {
        if (used[v]) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      for (VertexId v : p) used[v] = 1;
      for (std::size_t j = 0; j + 1 < p.size(); j += 2) {
        match[p[j]] = static_cast<int>(p[j + 1]);
        match[p[j + 1]] = static_cast<int>(p[j]);
      }
    }
  }
  return matching_from_partners(match);
}

StableMatchingRun threshold_augmenting_run(const Graph& g, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  const double mm = static_cast<double>(maximum_matching_size(g));
  const double m = static_cast<double>(g.m());
  if (mm <= 2.0 / eps + 1.0 || m <= 1.0 / (3.0 * eps)) {
    return {lex_min_maximum_matching(g), {}, "aeps-guard", 0.0};
  }
  const double eps_prime = eps / 3.0 - 1.0 / (3.0 * mm);
  ThresholdConfig cfg{m / (eps_prime * mm), 1.0 / (2.0 * ln_n(g))};
  auto inner = [eps_prime](const Graph& sub, std::uint64_t s) {
    return greedy_augmenting_matching(sub, eps_prime, s);
  };
  ThresholdedRun run = threshold_wrap(inner, g, cfg, stable_hash(seed, {kTagAeps}));
  return {std::move(run.matching), std::move(run.removed), "threshold", run.threshold};
}

Solution threshold_augmenting_matching(const Graph& g, double eps, std::uint64_t seed) {
  return threshold_augmenting_run(g, eps, seed).matching;
}

StableMatchingRun stable_one_minus_eps_matching_run(const Graph& g, double eps,
                                                    std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  const int k = static_cast<int>(std::ceil(1.0 / eps - 1.0));
  const double c = static_cast<double>(k) * static_cast<double>(k);
  const std::size_t mm = maximum_matching_size(g);
  if (static_cast<double>(mm) < 2.0 * c || static_cast<double>(g.m()) < 2.0 * c) {
    return {lex_min_maximum_matching(g), {}, "guard-max", 0.0};
  }
  const double m = static_cast<double>(g.m());
  const double f = static_cast<double>(mm) * static_cast<double>(mm) / m;
  const double gv = one_minus_eps_g_value(g.n(), m, static_cast<double>(mm), eps, c);
  const double rho = std::isfinite(gv) ? gv / (f + gv) : 1.0;
  Rng pick(stable_hash(seed, {kTagMixBranch}));
  if (pick.uniform01() < rho) {
    return {lex_min_maximum_matching(g), {}, "lex", 0.0};
  }
  return threshold_augmenting_run(g, eps, stable_hash(seed, {kTagDelegate}));
}

Solution stable_one_minus_eps_matching(const Graph& g, double eps, std::uint64_t seed) {
  return stable_one_minus_eps_matching_run(g, eps, seed).matching;
}

double mixture_f(const Graph& g) {
  if (g.m() == 0) throw ParameterError("f(G) undefined for edgeless graph");
  const double mm = static_cast<double>(maximum_matching_size(g));
  return mm * mm / static_cast<double>(g.m());
}

double mixture_g_half(const Graph& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  return half_g_value(g.n(), static_cast<double>(g.m()),
                      static_cast<double>(maximum_matching_size(g)), eps);
}

double mixture_g_one_minus_eps(const Graph& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0,1)");
  const int k = static_cast<int>(std::ceil(1.0 / eps - 1.0));
  return one_minus_eps_g_value(g.n(), static_cast<double>(g.m()),
                               static_cast<double>(maximum_matching_size(g)), eps,
                               static_cast<double>(k) * static_cast<double>(k));
}

}  // namespace stablegraphs
