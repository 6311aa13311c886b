#include "stablegraphs/solution.hpp"

#include <algorithm>

namespace stablegraphs {

Solution Solution::edge_set(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Solution s;
  s.kind_ = SolutionKind::EdgeSet;
  s.edges_ = std::move(edges);
  return s;
}

Solution Solution::vertex_set(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Solution s;
  s.kind_ = SolutionKind::VertexSet;
  s.vertices_ = std::move(vertices);
  return s;
}

const std::vector<EdgeId>& Solution::edges() const {
  if (kind_ != SolutionKind::EdgeSet) throw ValidationError("solution is not an edge set");
  return edges_;
}

const std::vector<VertexId>& Solution::vertices() const {
  if (kind_ != SolutionKind::VertexSet) throw ValidationError("solution is not a vertex set");
  return vertices_;
}

bool Solution::contains(EdgeId e) const {
  return kind_ == SolutionKind::EdgeSet &&
         std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Solution::contains(VertexId v) const {
  return kind_ == SolutionKind::VertexSet &&
         std::binary_search(vertices_.begin(), vertices_.end(), v);
}

namespace {

template <typename T>
std::size_t symmetric_difference_size(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t i = 0, j = 0, diff = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
      ++diff;
    } else {
      ++j;
      ++diff;
    }
  }
  return diff + (a.size() - i) + (b.size() - j);
}

}  // namespace

std::size_t hamming(const Solution& a, const Solution& b) {
  if (a.kind() != b.kind()) throw ValidationError("hamming distance requires matching solution kinds");
  if (a.kind() == SolutionKind::EdgeSet) return symmetric_difference_size(a.edges(), b.edges());
  return symmetric_difference_size(a.vertices(), b.vertices());
}

}  // namespace stablegraphs
