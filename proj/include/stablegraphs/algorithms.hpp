#pragma once

#include <string>
#include <vector>

#include "stablegraphs/harness.hpp"

namespace stablegraphs {

/// Handle for a registered algorithm by CLI name: kruskal, prim, mincut,
/// maxmatch, lexmatch, greedymatch, halfmatch, augmatch, fullmatch, vcmatch,
/// vcsample, 2color. eps feeds the algorithms that take one.
AlgorithmHandle make_algorithm(const std::string& name, double eps);

std::vector<std::string> algorithm_names();

}  // namespace stablegraphs
