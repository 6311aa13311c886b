#include "stablegraphs/mst.hpp"

#include <algorithm>
#include <numeric>

namespace stablegraphs {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Solution kruskal(const Graph& g) {
  std::vector<std::size_t> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double wa = g.weight_at(a), wb = g.weight_at(b);
    if (wa != wb) return wa < wb;
    return g.edges()[a] < g.edges()[b];
  });
  UnionFind uf(g.n());
  std::vector<EdgeId> forest;
  for (std::size_t idx : order) {
    const EdgeId& e = g.edges()[idx];
    if (uf.unite(e.u, e.v)) forest.push_back(e);
  }
  return Solution::edge_set(std::move(forest));
}

Solution prim(const Graph& g) {
  const std::uint32_t n = g.n();
  std::vector<char> in_tree(n, 0);
  std::vector<EdgeId> forest;

  for (VertexId root = 0; root < n; ++root) {
    if (in_tree[root]) continue;
    in_tree[root] = 1;
    for (;;) {
      // scan the frontier for the minimum-weight edge, tie-break by
      // (tree endpoint, non-tree endpoint)
      bool found = false;
      double best_w = 0.0;
      VertexId best_in = 0, best_out = 0;
      for (std::size_t idx = 0; idx < g.m(); ++idx) {
        const EdgeId& e = g.edges()[idx];
        bool iu = in_tree[e.u], iv = in_tree[e.v];
        if (iu == iv) continue;
        VertexId tip_in = iu ? e.u : e.v;
        VertexId tip_out = iu ? e.v : e.u;
        double w = g.weight_at(idx);
        if (!found || w < best_w ||
            (w == best_w && (tip_in < best_in || (tip_in == best_in && tip_out < best_out)))) {
          found = true;
          best_w = w;
          best_in = tip_in;
          best_out = tip_out;
        }
      }
      if (!found) break;  // component spanned
      forest.emplace_back(best_in, best_out);
      in_tree[best_out] = 1;
    }
  }
  return Solution::edge_set(std::move(forest));
}

}  // namespace stablegraphs
