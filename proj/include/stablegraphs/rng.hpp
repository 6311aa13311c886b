#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "stablegraphs/errors.hpp"

namespace stablegraphs {

/// Location/scale pair for the Laplace threshold mechanism.
/// Density f(x) = exp(-|x - mu| / phi) / (2 phi).
struct LaplaceParams {
  double mu = 0.0;
  double phi = 1.0;
};

/// Mixes one 64-bit word (splitmix64 finalizer). Stable across platforms.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combination of a base seed and any number of parts.
/// Every derived stream in the repository comes from this, so results are a
/// pure function of (inputs, base seed) regardless of scheduling.
std::uint64_t stable_hash(std::uint64_t seed, std::initializer_list<std::uint64_t> parts);

/// Deterministic stream generator (splitmix64). One instance per logical
/// stream; never shared between workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in the open interval (0, 1); exactly one next_u64 consumed.
  double uniform01();

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Inverse-CDF Laplace sample; consumes exactly one uniform.
double sample_laplace(const LaplaceParams& params, Rng& rng);

/// Priority of a single edge under a given priority-stream seed, uniform in
/// [0, 1). Derived per edge from (seed, endpoints), so restricting a graph's
/// priorities to a subgraph is pointwise identical to sampling them for the
/// subgraph directly.
double edge_priority(std::uint64_t priority_seed, std::uint32_t u, std::uint32_t v);

}  // namespace stablegraphs
