#pragma once

#include "stablegraphs/solution.hpp"

namespace stablegraphs {

/// Minimum spanning forest by Kruskal; ties broken by canonical EdgeId order.
/// Unweighted graphs get unit weights.
Solution kruskal(const Graph& g);

/// Minimum spanning forest by Prim, per component from its smallest vertex.
/// Among minimum-weight frontier edges, the one with the lexicographically
/// smallest tree endpoint wins; remaining ties go to the smallest non-tree
/// endpoint.
Solution prim(const Graph& g);

}  // namespace stablegraphs
