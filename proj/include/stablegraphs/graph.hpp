#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablegraphs/errors.hpp"

namespace stablegraphs {

using VertexId = std::uint32_t;

/// Unordered endpoint pair in canonical form (u < v). Edge identity is by
/// endpoints, never by position, so the same EdgeId names the same edge in G
/// and in G-e.
struct EdgeId {
  VertexId u = 0;
  VertexId v = 0;

  EdgeId() = default;
  EdgeId(VertexId a, VertexId b);

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct EdgeIdHash {
  std::size_t operator()(const EdgeId& e) const {
    return (static_cast<std::size_t>(e.u) << 32) ^ e.v;
  }
};

/// Immutable simple undirected graph with stable 0-based vertex ids and an
/// optional edge weight map (weighted MST only). Removal returns a new value;
/// the harness holds G and many G-e at once.
class Graph {
 public:
  Graph() = default;
  Graph(std::uint32_t n, std::vector<EdgeId> edges);
  Graph(std::uint32_t n, std::vector<EdgeId> edges, std::vector<double> weights);

  std::uint32_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool weighted() const { return !weights_.empty(); }

  bool has_edge(EdgeId e) const;
  /// Index of e in edges(); throws ValidationError if absent.
  std::size_t edge_index(EdgeId e) const;
  double weight(EdgeId e) const;
  double weight_at(std::size_t idx) const { return weights_.empty() ? 1.0 : weights_[idx]; }

  std::uint32_t degree(VertexId v) const;
  /// Neighbors of v in ascending order.
  const std::vector<VertexId>& neighbors(VertexId v) const;

  /// G - e. Throws ValidationError if e is not present.
  Graph remove_edge(EdgeId e) const;
  /// Same vertex set, all edges incident to a flagged vertex dropped.
  Graph without_vertices(const std::vector<bool>& removed) const;

  std::uint32_t component_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build_adjacency();

  std::uint32_t n_ = 0;
  std::vector<EdgeId> edges_;     // sorted canonical
  std::vector<double> weights_;   // empty or parallel to edges_
  std::vector<std::vector<VertexId>> adj_;
};

/// Lines are "u v" with an optional weight token; '#' comments and blank lines
/// ignored; an "n <count>" header may declare isolated vertices.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// Stable content hash for provenance fields.
std::uint64_t graph_hash(const Graph& g);

Graph generate_path(std::uint32_t n);
Graph generate_cycle(std::uint32_t n);
Graph generate_complete(std::uint32_t n);
Graph generate_star(std::uint32_t n);
/// The adversarial family for Prim's tie-break (even n >= 8): a path
/// 1..n/2-1 closed back through the hub n/2 to vertex 1, with every vertex in
/// {n/2+1..n} adjacent to both hubs n/2-1 and n/2 (labels 1-indexed as in the
/// construction, stored 0-indexed). m = 3n/2 - 1.
Graph generate_prim_adversarial(std::uint32_t n);
Graph generate_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

struct GeneratorParams {
  std::uint32_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Dispatch by family name: path, cycle, complete, star, prim_adversarial,
/// erdos_renyi. Unknown family -> ParameterError.
Graph generate(const std::string& family, const GeneratorParams& params);

}  // namespace stablegraphs
