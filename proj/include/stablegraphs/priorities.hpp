#pragma once

#include <cstdint>
#include <unordered_map>

#include "stablegraphs/graph.hpp"
#include "stablegraphs/rng.hpp"

namespace stablegraphs {

using EdgePriorityMap = std::unordered_map<EdgeId, double, EdgeIdHash>;

/// i.i.d. uniform priorities for every edge of g, derived per edge from
/// (seed, endpoints). Sorting edges by (priority, canonical EdgeId) realizes a
/// uniformly random edge ordering; restricting to a subgraph's edges leaves
/// the per-edge values unchanged.
EdgePriorityMap edge_priorities(const Graph& g, std::uint64_t seed);

/// Priority lookup that throws ValidationError when an edge is uncovered.
double priority_of(const EdgePriorityMap& priorities, EdgeId e);

}  // namespace stablegraphs
