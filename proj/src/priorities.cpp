#include "stablegraphs/priorities.hpp"

namespace stablegraphs {

EdgePriorityMap edge_priorities(const Graph& g, std::uint64_t seed) {
  EdgePriorityMap priorities;
  priorities.reserve(g.m());
  for (const EdgeId& e : g.edges()) {
    priorities.emplace(e, edge_priority(seed, e.u, e.v));
  }
  return priorities;
}

double priority_of(const EdgePriorityMap& priorities, EdgeId e) {
  auto it = priorities.find(e);
  if (it == priorities.end()) {
    throw ValidationError("missing priority for edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ")");
  }
  return it->second;
}

}  // namespace stablegraphs
