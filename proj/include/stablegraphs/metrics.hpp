#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// Multiset of solutions drawn from one algorithm run configuration.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  explicit EmpiricalDistribution(std::vector<Solution> samples);

  const std::vector<Solution>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  SolutionKind kind() const;

  void push(Solution s);

 private:
  std::vector<Solution> samples_;
};

/// Finite support with probabilities; sums to 1 within 1e-9.
class ExactDistribution {
 public:
  ExactDistribution() = default;
  /// Merges duplicate solutions; validates nonnegativity and normalization.
  explicit ExactDistribution(std::vector<std::pair<Solution, double>> support);

  const std::vector<std::pair<Solution, double>>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  SolutionKind kind() const;

  double probability_of(const Solution& s) const;

 private:
  std::vector<std::pair<Solution, double>> support_;  // sorted by solution
};

/// Collapse a sample multiset to its weighted support.
ExactDistribution collapse(const EmpiricalDistribution& d);

/// Mean cost of the optimal perfect pairing of the two sample lists under the
/// Hamming ground metric. Requires equal sample counts (caller equalizes N).
double empirical_emd(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// (1/2) sum |p_a - p_b| over the union of supports.
double tv_distance(const ExactDistribution& a, const ExactDistribution& b);

/// Optimal transport cost under the Hamming ground metric (splittable mass).
/// Support-size product capped at 1e6.
double exact_emd(const ExactDistribution& a, const ExactDistribution& b);

}  // namespace stablegraphs
