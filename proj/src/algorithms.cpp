#include "stablegraphs/algorithms.hpp"

#include "stablegraphs/coloring.hpp"
#include "stablegraphs/matching.hpp"
#include "stablegraphs/mincut.hpp"
#include "stablegraphs/mst.hpp"
#include "stablegraphs/vertexcover.hpp"

namespace stablegraphs {

AlgorithmHandle make_algorithm(const std::string& name, double eps) {
  AlgorithmHandle h;
  h.name = name;
  if (name == "kruskal") {
    h.deterministic = true;
    h.run = [](const Graph& g, std::uint64_t) { return kruskal(g); };
  } else if (name == "prim") {
    h.deterministic = true;
    h.run = [](const Graph& g, std::uint64_t) { return prim(g); };
  } else if (name == "mincut") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return stable_min_cut(g, eps, seed).side;
    };
  } else if (name == "maxmatch") {
    h.deterministic = true;
    h.run = [](const Graph& g, std::uint64_t) { return maximum_matching(g); };
  } else if (name == "lexmatch") {
    h.deterministic = true;
    h.run = [](const Graph& g, std::uint64_t) { return lex_min_maximum_matching(g); };
  } else if (name == "greedymatch") {
    h.run = [](const Graph& g, std::uint64_t seed) {
      return randomized_greedy_matching(g, edge_priorities(g, seed));
    };
  } else if (name == "halfmatch") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return stable_half_matching(g, eps, seed);
    };
  } else if (name == "augmatch") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return greedy_augmenting_matching(g, eps, seed);
    };
  } else if (name == "fullmatch") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return stable_one_minus_eps_matching(g, eps, seed);
    };
  } else if (name == "vcmatch") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return stable_vc_via_matching(g, eps, seed);
    };
  } else if (name == "vcsample") {
    h.run = [eps](const Graph& g, std::uint64_t seed) {
      return stable_vc_sampling(g, eps, seed);
    };
  } else if (name == "2color") {
    h.deterministic = true;
    h.run = [](const Graph& g, std::uint64_t) { return two_coloring(g); };
  } else {
    throw ParameterError("unknown algorithm '" + name + "'");
  }
  return h;
}

std::vector<std::string> algorithm_names() {
  return {"kruskal",  "prim",     "mincut",   "maxmatch", "lexmatch", "greedymatch",
          "halfmatch", "augmatch", "fullmatch", "vcmatch",  "vcsample", "2color"};
}

}  // namespace stablegraphs
