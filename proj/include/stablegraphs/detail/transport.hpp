#pragma once

#include <cstdint>
#include <vector>

namespace stablegraphs::detail {

/// Minimum total cost of a perfect assignment between rows and columns of a
/// square cost matrix (Jonker-Volgenant style shortest augmenting paths with
/// dual potentials). cost[i][j] >= 0.
double jv_assignment(const std::vector<std::vector<double>>& cost);

/// Minimum-cost transportation of supply onto demand with unit costs
/// cost[i][j] >= 0 and sum(supply) == sum(demand) (up to ~1e-9). Splittable
/// mass; exact successive shortest augmenting paths with Dijkstra potentials.
double transport_min_cost(const std::vector<double>& supply, const std::vector<double>& demand,
                          const std::vector<std::vector<double>>& cost);

}  // namespace stablegraphs::detail
