#pragma once

#include <cstdint>

#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// True iff every edge of g has an endpoint in s. Foreign ids are rejected.
bool is_vertex_cover(const Graph& g, const Solution& s);

/// Vertex cover from the stable matching machinery run at eps/2: endpoints of
/// the matching plus the vertices removed by the degree threshold.
Solution stable_vc_via_matching(const Graph& g, double eps, std::uint64_t seed);

struct VcSamplingRun {
  Solution cover;
  bool assumption_violated = false;  // flags n > m^(1+eps)
};

/// Weighted-sampling cover: n rounds, round i samples a remaining vertex with
/// probability proportional to deg + 2 m^(1+eps)/(n-i+1), keeping it iff it
/// still covers something.
VcSamplingRun stable_vc_sampling_run(const Graph& g, double eps, std::uint64_t seed);
Solution stable_vc_sampling(const Graph& g, double eps, std::uint64_t seed);

}  // namespace stablegraphs
