#include "stablegraphs/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <thread>

#include "stablegraphs/rng.hpp"

namespace stablegraphs {

namespace {

constexpr std::uint64_t kTagEdgeDraw = 0x68610001ULL;
constexpr std::uint64_t kTagSample = 0x68610002ULL;
constexpr std::uint64_t kTagBootstrap = 0x68610003ULL;
constexpr std::uint64_t kTagMixturePick = 0x68610004ULL;
constexpr std::uint64_t kTagMixtureDelegate = 0x68610005ULL;

void require_edges(const Graph& g) {
  if (g.m() == 0) throw ParameterError("average sensitivity is undefined for m = 0");
}

Graph remove_edge_set(const Graph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph out = g;
  for (const EdgeId& e : edges) out = out.remove_edge(e);
  return out;
}

}  // namespace

double exact_average_sensitivity(const AlgorithmHandle& alg, const Graph& g) {
  if (!alg.deterministic) {
    throw ValidationError("exact enumeration requires a deterministic algorithm handle");
  }
  require_edges(g);
  const Solution base = alg.run(g, 0);
  double total = 0.0;
  for (const EdgeId& e : g.edges()) {
    total += static_cast<double>(hamming(base, alg.run(g.remove_edge(e), 0)));
  }
  return total / static_cast<double>(g.m());
}

double exact_k_average_sensitivity(const AlgorithmHandle& alg, const Graph& g, int k) {
  if (!alg.deterministic) {
    throw ValidationError("exact enumeration requires a deterministic algorithm handle");
  }
  require_edges(g);
  if (k < 1 || static_cast<std::size_t>(k) > g.m()) {
    throw ParameterError("k must lie in [1, m]");
  }
  double tuples = std::pow(static_cast<double>(g.m()), k);
  if (tuples > 2e6) throw CapacityError("m^k too large for exact enumeration");

  const Solution base = alg.run(g, 0);
  // distinct removal sets repeat heavily across ordered tuples
  std::map<std::vector<EdgeId>, double> cache;
  const std::size_t m = g.m();
  std::vector<std::size_t> tuple(static_cast<std::size_t>(k), 0);
  double total = 0.0;
  std::size_t count = 0;
  for (;;) {
    std::vector<EdgeId> removal;
    removal.reserve(tuple.size());
    for (std::size_t idx : tuple) removal.push_back(g.edges()[idx]);
    std::sort(removal.begin(), removal.end());
    removal.erase(std::unique(removal.begin(), removal.end()), removal.end());
    auto it = cache.find(removal);
    if (it == cache.end()) {
      Graph stripped = remove_edge_set(g, removal);
      double d = static_cast<double>(hamming(base, alg.run(stripped, 0)));
      it = cache.emplace(std::move(removal), d).first;
    }
    total += it->second;
    ++count;
    // advance odometer
    std::size_t pos = 0;
    while (pos < tuple.size()) {
      if (++tuple[pos] < m) break;
      tuple[pos] = 0;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }
  return total / static_cast<double>(count);
}

namespace {

struct DrawResult {
  double emd = 0.0;
  std::size_t max_weight = 0;
};

DrawResult run_one_draw(const AlgorithmHandle& alg, const Graph& g, int k,
                        std::size_t n_output_samples, std::uint64_t base_seed, std::size_t draw) {
  Rng pick(stable_hash(base_seed, {kTagEdgeDraw, draw}));
  std::vector<EdgeId> removal;
  removal.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    removal.push_back(g.edges()[pick.below(g.m())]);
  }
  Graph stripped = remove_edge_set(g, removal);

  const std::size_t samples = alg.deterministic ? 1 : n_output_samples;
  DrawResult out;
  EmpiricalDistribution side_g, side_stripped;
  for (std::size_t r = 0; r < samples; ++r) {
    // common random numbers: replicate r runs with the same seed on both
    // sides, shrinking the plug-in bias of the empirical EMD while leaving
    // the per-side marginals (and hence the estimand) untouched
    std::uint64_t replicate_seed = stable_hash(base_seed, {kTagSample, draw, r});
    Solution s0 = alg.run(g, replicate_seed);
    Solution s1 = alg.run(stripped, replicate_seed);
    out.max_weight = std::max({out.max_weight, s0.size(), s1.size()});
    side_g.push(std::move(s0));
    side_stripped.push(std::move(s1));
  }
  out.emd = empirical_emd(side_g, side_stripped);
  return out;
}

SensitivityEstimate estimate_impl(const AlgorithmHandle& alg, const Graph& g, int k,
                                  std::size_t n_edge_draws, std::size_t n_output_samples,
                                  std::uint64_t base_seed, unsigned jobs) {
  require_edges(g);
  if (k < 1 || static_cast<std::size_t>(k) > g.m()) throw ParameterError("k must lie in [1, m]");
  if (n_edge_draws == 0) throw ParameterError("need at least one edge draw");
  if (!alg.deterministic && n_output_samples < 2) {
    throw ParameterError("randomized estimation needs n_output_samples >= 2");
  }

  auto t0 = std::chrono::steady_clock::now();
  std::vector<DrawResult> results(n_edge_draws);
  if (jobs <= 1 || n_edge_draws < 2) {
    for (std::size_t t = 0; t < n_edge_draws; ++t) {
      results[t] = run_one_draw(alg, g, k, n_output_samples, base_seed, t);
    }
  } else {
    // per-draw work units are independent; results land by index, so the
    // aggregate is identical for any job count
    unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(n_edge_draws));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t t = w; t < n_edge_draws; t += workers) {
          results[t] = run_one_draw(alg, g, k, n_output_samples, base_seed, t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SensitivityEstimate est;
  est.k = k;
  est.n_edge_draws = n_edge_draws;
  est.n_output_samples = alg.deterministic ? 1 : n_output_samples;
  est.seed = base_seed;
  est.per_draw_emd.reserve(n_edge_draws);
  double sum = 0.0;
  for (const DrawResult& r : results) {
    est.per_draw_emd.push_back(r.emd);
    est.max_hamming_weight = std::max(est.max_hamming_weight, r.max_weight);
    sum += r.emd;
  }
  est.point = sum / static_cast<double>(n_edge_draws);

  // percentile bootstrap over per-draw values
  constexpr std::size_t kResamples = 1000;
  std::vector<double> means(kResamples);
  Rng boot(stable_hash(base_seed, {kTagBootstrap}));
  for (std::size_t b = 0; b < kResamples; ++b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n_edge_draws; ++i) {
      acc += est.per_draw_emd[boot.below(n_edge_draws)];
    }
    means[b] = acc / static_cast<double>(n_edge_draws);
  }
  std::sort(means.begin(), means.end());
  est.ci_low = std::min(means[25], est.point);
  est.ci_high = std::max(means[974], est.point);

  est.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return est;
}

}  // namespace

SensitivityEstimate estimate_average_sensitivity(const AlgorithmHandle& alg, const Graph& g,
                                                 std::size_t n_edge_draws,
                                                 std::size_t n_output_samples,
                                                 std::uint64_t base_seed, unsigned jobs) {
  return estimate_impl(alg, g, 1, n_edge_draws, n_output_samples, base_seed, jobs);
}

SensitivityEstimate estimate_k_average_sensitivity(const AlgorithmHandle& alg, const Graph& g,
                                                   int k, std::size_t n_edge_draws,
                                                   std::size_t n_output_samples,
                                                   std::uint64_t base_seed, unsigned jobs) {
  return estimate_impl(alg, g, k, n_edge_draws, n_output_samples, base_seed, jobs);
}

AlgorithmHandle parallel_mixture(std::vector<AlgorithmHandle> algorithms,
                                 std::function<std::vector<double>(const Graph&)> weight_fn,
                                 std::string name) {
  if (algorithms.empty()) throw ParameterError("mixture needs at least one component");
  auto components = std::make_shared<std::vector<AlgorithmHandle>>(std::move(algorithms));
  auto weights = std::make_shared<std::function<std::vector<double>(const Graph&)>>(
      std::move(weight_fn));
  AlgorithmHandle handle;
  handle.name = std::move(name);
  handle.deterministic = false;
  handle.run = [components, weights](const Graph& g, std::uint64_t seed) {
    std::vector<double> rho = (*weights)(g);
    if (rho.size() != components->size()) {
      throw ParameterError("mixture weight vector size mismatch");
    }
    double total = 0.0;
    for (double p : rho) {
      if (p < 0.0) throw ParameterError("mixture weights must be nonnegative");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw ParameterError("mixture weights sum to " + std::to_string(total));
    }
    Rng pick(stable_hash(seed, {kTagMixturePick}));
    double u = pick.uniform01();
    double acc = 0.0;
    std::size_t choice = components->size() - 1;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      acc += rho[i];
      if (u < acc) {
        choice = i;
        break;
      }
    }
    return (*components)[choice].run(g, stable_hash(seed, {kTagMixtureDelegate, choice}));
  };
  return handle;
}

}  // namespace stablegraphs
