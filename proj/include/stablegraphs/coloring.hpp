#pragma once

#include <cstdint>
#include <vector>

#include "stablegraphs/solution.hpp"

namespace stablegraphs {

class NotBipartiteError : public ValidationError {
 public:
  NotBipartiteError(EdgeId witness)
      : ValidationError("graph is not bipartite: edge (" + std::to_string(witness.u) + "," +
                        std::to_string(witness.v) + ") joins same-color vertices"),
        witness_(witness) {}
  EdgeId witness() const { return witness_; }

 private:
  EdgeId witness_;
};

/// Deterministic 2-coloring: BFS layers per component rooted at the
/// component's smallest vertex; returns the part containing each root.
/// Isolated vertices belong to the returned part. Odd cycles raise
/// NotBipartiteError naming a violating edge.
Solution two_coloring(const Graph& g);

/// Exact average sensitivity of two_coloring on path(n), in closed form:
/// removing edge (i, i+1) (0-indexed) recolors the suffix iff i is even,
/// at Hamming cost n-1-i.
double path_two_coloring_sensitivity_closed_form(std::uint32_t n);

struct ColoringExperimentRow {
  std::uint32_t n = 0;
  double sensitivity = 0.0;
  double closed_form = 0.0;
};

struct ColoringExperimentReport {
  std::vector<ColoringExperimentRow> rows;
  double fitted_slope = 0.0;  // least-squares slope of sensitivity vs n
};

/// Measures exact average sensitivity of two_coloring on path(n) for each n
/// and fits the slope against n.
ColoringExperimentReport coloring_sensitivity_experiment(const std::vector<std::uint32_t>& sizes);

}  // namespace stablegraphs
