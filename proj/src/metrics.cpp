#include "stablegraphs/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "stablegraphs/detail/transport.hpp"
#include "stablegraphs/errors.hpp"

namespace stablegraphs {

EmpiricalDistribution::EmpiricalDistribution(std::vector<Solution> samples)
    : samples_(std::move(samples)) {
  for (const Solution& s : samples_) {
    if (s.kind() != samples_.front().kind()) {
      throw ValidationError("mixed solution kinds in empirical distribution");
    }
  }
}

SolutionKind EmpiricalDistribution::kind() const {
  if (samples_.empty()) throw ValidationError("empty empirical distribution has no kind");
  return samples_.front().kind();
}

void EmpiricalDistribution::push(Solution s) {
  if (!samples_.empty() && s.kind() != samples_.front().kind()) {
    throw ValidationError("mixed solution kinds in empirical distribution");
  }
  samples_.push_back(std::move(s));
}

ExactDistribution::ExactDistribution(std::vector<std::pair<Solution, double>> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw ValidationError("exact distribution needs nonempty support");
  std::sort(support_.begin(), support_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Solution, double>> merged;
  for (auto& [sol, p] : support_) {
    if (p < -1e-12) throw ValidationError("negative probability in exact distribution");
    if (sol.kind() != support_.front().first.kind()) {
      throw ValidationError("mixed solution kinds in exact distribution");
    }
    if (!merged.empty() && merged.back().first == sol) {
      merged.back().second += p;
    } else {
      merged.emplace_back(std::move(sol), p);
    }
  }
  support_ = std::move(merged);
  double total = 0.0;
  for (const auto& [sol, p] : support_) total += p;
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("exact distribution probabilities sum to " + std::to_string(total));
  }
}

SolutionKind ExactDistribution::kind() const { return support_.front().first.kind(); }

double ExactDistribution::probability_of(const Solution& s) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), s,
                             [](const auto& entry, const Solution& key) { return entry.first < key; });
  if (it == support_.end() || !(it->first == s)) return 0.0;
  return it->second;
}

ExactDistribution collapse(const EmpiricalDistribution& d) {
  if (d.size() == 0) throw ValidationError("cannot collapse empty distribution");
  std::vector<Solution> sorted = d.samples();
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Solution, double>> support;
  const double w = 1.0 / static_cast<double>(sorted.size());
  for (Solution& s : sorted) {
    if (!support.empty() && support.back().first == s) {
      support.back().second += w;
    } else {
      support.emplace_back(std::move(s), w);
    }
  }
  return ExactDistribution(std::move(support));
}

namespace {

// For large distinct supports the raw N x N assignment is faster than
// successive shortest paths on the collapsed instance.
constexpr std::size_t kTransportSupportCap = 40000;

std::vector<std::vector<double>> cost_matrix(const std::vector<const Solution*>& a,
                                             const std::vector<const Solution*>& b) {
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      cost[i][j] = static_cast<double>(hamming(*a[i], *b[j]));
  return cost;
}

}  // namespace

double empirical_emd(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  if (a.size() == 0 || b.size() == 0) throw ValidationError("empirical EMD needs nonempty samples");
  if (a.size() != b.size()) {
    throw ValidationError("empirical EMD requires equal sample counts (" +
                          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  if (a.kind() != b.kind()) throw ValidationError("empirical EMD requires matching kinds");

  ExactDistribution ca = collapse(a);
  ExactDistribution cb = collapse(b);
  if (ca.size() * cb.size() <= kTransportSupportCap) return exact_emd(ca, cb);

  std::vector<const Solution*> pa, pb;
  pa.reserve(a.size());
  pb.reserve(b.size());
  for (const Solution& s : a.samples()) pa.push_back(&s);
  for (const Solution& s : b.samples()) pb.push_back(&s);
  double total = detail::jv_assignment(cost_matrix(pa, pb));
  return total / static_cast<double>(a.size());
}

double tv_distance(const ExactDistribution& a, const ExactDistribution& b) {
  if (a.kind() != b.kind()) throw ValidationError("TV distance requires matching kinds");
  double acc = 0.0;
  std::size_t i = 0, j = 0;
  const auto& sa = a.support();
  const auto& sb = b.support();
  while (i < sa.size() || j < sb.size()) {
    if (j >= sb.size() || (i < sa.size() && sa[i].first < sb[j].first)) {
      acc += std::abs(sa[i].second);
      ++i;
    } else if (i >= sa.size() || sb[j].first < sa[i].first) {
      acc += std::abs(sb[j].second);
      ++j;
    } else {
      acc += std::abs(sa[i].second - sb[j].second);
      ++i;
      ++j;
    }
  }
  return 0.5 * acc;
}

double exact_emd(const ExactDistribution& a, const ExactDistribution& b) {
  if (a.kind() != b.kind()) throw ValidationError("exact EMD requires matching kinds");
  if (a.size() * b.size() > 1000000) {
    throw CapacityError("exact EMD support product " + std::to_string(a.size() * b.size()) +
                        " exceeds 1e6");
  }
  std::vector<double> supply(a.size()), demand(b.size());
  std::vector<const Solution*> pa(a.size()), pb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    supply[i] = a.support()[i].second;
    pa[i] = &a.support()[i].first;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    demand[j] = b.support()[j].second;
    pb[j] = &b.support()[j].first;
  }
  return detail::transport_min_cost(supply, demand, cost_matrix(pa, pb));
}

}  // namespace stablegraphs
