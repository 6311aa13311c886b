#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stablegraphs/metrics.hpp"
#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// A runnable algorithm under measurement. deterministic = true promises the
/// output ignores the seed (spot-checked by tests, enforced by the exact
/// enumerators).
struct AlgorithmHandle {
  std::string name;
  std::function<Solution(const Graph&, std::uint64_t)> run;
  bool deterministic = false;
};

struct SensitivityEstimate {
  double point = 0.0;
  double ci_low = 0.0;   // 95% bootstrap over per-edge-draw EMD values
  double ci_high = 0.0;
  int k = 1;
  std::size_t n_edge_draws = 0;
  std::size_t n_output_samples = 0;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;
  std::size_t max_hamming_weight = 0;  // largest |solution| observed
  std::vector<double> per_draw_emd;
};

/// (1/m) sum over e of d_Ham(A(G), A(G-e)), by full enumeration. The handle
/// must be deterministic and m >= 1.
double exact_average_sensitivity(const AlgorithmHandle& alg, const Graph& g);

/// Full enumeration over all m^k ordered tuples of removed edges (duplicates
/// are no-ops). Capped at 2e6 tuples.
double exact_k_average_sensitivity(const AlgorithmHandle& alg, const Graph& g, int k);

/// Monte Carlo estimator of randomized average sensitivity: n_edge_draws
/// uniform edges (with replacement); per draw, n_output_samples outputs on
/// each side (replicate seeds shared across sides as common random numbers)
/// and an exact empirical EMD between them; bootstrap CI (1000 resamples)
/// over the per-draw values. Deterministic handles collapse to one sample
/// per side.
SensitivityEstimate estimate_average_sensitivity(const AlgorithmHandle& alg, const Graph& g,
                                                 std::size_t n_edge_draws,
                                                 std::size_t n_output_samples,
                                                 std::uint64_t base_seed, unsigned jobs = 1);

/// Same with k i.i.d. uniform removals per draw (removing an already-removed
/// edge is a no-op).
SensitivityEstimate estimate_k_average_sensitivity(const AlgorithmHandle& alg, const Graph& g,
                                                   int k, std::size_t n_edge_draws,
                                                   std::size_t n_output_samples,
                                                   std::uint64_t base_seed, unsigned jobs = 1);

/// Handle that draws component i with probability weight_fn(g)[i] (first
/// uniform of its stream) and delegates the rest of the stream.
AlgorithmHandle parallel_mixture(std::vector<AlgorithmHandle> algorithms,
                                 std::function<std::vector<double>(const Graph&)> weight_fn,
                                 std::string name);

}  // namespace stablegraphs
