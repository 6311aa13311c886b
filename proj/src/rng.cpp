#include "stablegraphs/rng.hpp"

#include <cmath>

namespace stablegraphs {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stable_hash(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = mix64(seed ^ 0x5bf03635f0a5b7c1ULL);
  for (std::uint64_t p : parts) {
    h = mix64(h ^ mix64(p));
  }
  return h;
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  // 53 random bits, shifted into (0,1) so log() never sees 0.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ParameterError("Rng::below requires n > 0");
  std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

double sample_laplace(const LaplaceParams& params, Rng& rng) {
  if (!(params.phi > 0.0)) throw ParameterError("Laplace scale must be positive");
  double u = rng.uniform01();
  if (u < 0.5) return params.mu + params.phi * std::log(2.0 * u);
  return params.mu - params.phi * std::log(2.0 * (1.0 - u));
}

double edge_priority(std::uint64_t priority_seed, std::uint32_t u, std::uint32_t v) {
  std::uint64_t h = stable_hash(priority_seed, {0xed6e5a11ULL, u, v});
  return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace stablegraphs
