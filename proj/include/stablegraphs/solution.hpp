#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {

enum class SolutionKind { EdgeSet, VertexSet };

/// An algorithm output: a set of edge identities or vertex identities. This is
/// the unit the Hamming distance compares.
class Solution {
 public:
  static Solution edge_set(std::vector<EdgeId> edges);
  static Solution vertex_set(std::vector<VertexId> vertices);

  SolutionKind kind() const { return kind_; }
  std::size_t size() const {
    return kind_ == SolutionKind::EdgeSet ? edges_.size() : vertices_.size();
  }
  const std::vector<EdgeId>& edges() const;
  const std::vector<VertexId>& vertices() const;
  bool contains(EdgeId e) const;
  bool contains(VertexId v) const;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;

 private:
  SolutionKind kind_ = SolutionKind::EdgeSet;
  std::vector<EdgeId> edges_;       // sorted, unique
  std::vector<VertexId> vertices_;  // sorted, unique
};

/// |a symmetric-difference b|. Kinds must match.
std::size_t hamming(const Solution& a, const Solution& b);

}  // namespace stablegraphs
