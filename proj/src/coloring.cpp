#include "stablegraphs/coloring.hpp"

#include <deque>

#include "stablegraphs/graph.hpp"

namespace stablegraphs {

Solution two_coloring(const Graph& g) {
  const std::uint32_t n = g.n();
  std::vector<int> color(n, -1);
  std::vector<VertexId> out;
  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          throw NotBipartiteError(EdgeId(v, w));
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (color[v] == 0) out.push_back(v);
  }
  return Solution::vertex_set(std::move(out));
}

double path_two_coloring_sensitivity_closed_form(std::uint32_t n) {
  if (n < 2) throw ParameterError("path sensitivity needs n >= 2");
  double sum = 0.0;
  for (std::uint32_t i = 0; i + 1 < n; i += 2) {
    sum += static_cast<double>(n - 1 - i);
  }
  return sum / static_cast<double>(n - 1);
}

ColoringExperimentReport coloring_sensitivity_experiment(
    const std::vector<std::uint32_t>& sizes) {
  ColoringExperimentReport report;
  for (std::uint32_t n : sizes) {
    if (n < 4) throw ParameterError("experiment sizes must be >= 4");
    Graph g = generate_path(n);
    Solution base = two_coloring(g);
    double total = 0.0;
    for (const EdgeId& e : g.edges()) {
      total += static_cast<double>(hamming(base, two_coloring(g.remove_edge(e))));
    }
    double sens = total / static_cast<double>(g.m());
    report.rows.push_back({n, sens, path_two_coloring_sensitivity_closed_form(n)});
  }
  // least-squares slope of sensitivity against n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double count = static_cast<double>(report.rows.size());
  for (const auto& row : report.rows) {
    double x = static_cast<double>(row.n);
    sx += x;
    sy += row.sensitivity;
    sxx += x * x;
    sxy += x * row.sensitivity;
  }
  double denom = count * sxx - sx * sx;
  report.fitted_slope = denom != 0.0 ? (count * sxy - sx * sy) / denom : 0.0;
  return report;
}

}  // namespace stablegraphs
