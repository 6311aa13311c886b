#include "stablegraphs/detail/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stablegraphs/errors.hpp"

namespace stablegraphs::detail {

double jv_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return 0.0;
  const double kInf = std::numeric_limits<double>::infinity();

  // 1-based arrays; p[j] = row assigned to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  double total = 0.0;
  for (int j = 1; j <= n; ++j) total += cost[p[j] - 1][j - 1];
  return total;
}

namespace {

// Dense successive-shortest-paths min-cost flow specialized to the
// transportation network S -> sources -> sinks -> T. Real-valued masses;
// every augmentation saturates a source or sink arc, so the number of
// iterations is at most (#sources + #sinks).
class TransportSolver {
 public:
  TransportSolver(const std::vector<double>& supply, const std::vector<double>& demand,
                  const std::vector<std::vector<double>>& cost)
      : a_(supply.size()),
        b_(demand.size()),
        n_nodes_(a_ + b_ + 2),
        supply_(supply),
        demand_(demand),
        cost_(cost),
        flow_src_(a_, 0.0),
        flow_dst_(b_, 0.0),
        flow_(a_, std::vector<double>(b_, 0.0)),
        pot_(n_nodes_, 0.0) {}

  double solve() {
    double total_supply = 0.0;
    for (double s : supply_) total_supply += s;
    double shipped = 0.0;
    while (total_supply - shipped > kMassEps) {
      if (!augment_once(shipped)) {
        throw Error("transportation problem infeasible (supply exceeds demand)");
      }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < a_; ++i)
      for (std::size_t j = 0; j < b_; ++j) total += flow_[i][j] * cost_[i][j];
    return total;
  }

 private:
  static constexpr double kMassEps = 1e-12;

  std::size_t src_node(std::size_t i) const { return 1 + i; }
  std::size_t dst_node(std::size_t j) const { return 1 + a_ + j; }
  std::size_t t_node() const { return n_nodes_ - 1; }

  bool augment_once(double& shipped) {
    const double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n_nodes_, kInf);
    std::vector<int> parent(n_nodes_, -1);
    std::vector<char> done(n_nodes_, 0);
    dist[0] = 0.0;

    for (;;) {
      int u = -1;
      double best = kInf;
      for (std::size_t v = 0; v < n_nodes_; ++v)
        if (!done[v] && dist[v] < best) best = dist[v], u = int(v);
      if (u < 0) break;
      done[std::size_t(u)] = 1;
      relax_from(std::size_t(u), dist, parent);
    }

    if (dist[t_node()] == kInf) return false;

    // bottleneck along parent chain
    double bottleneck = kInf;
    for (std::size_t v = t_node(); v != 0;) {
      std::size_t u = std::size_t(parent[v]);
      bottleneck = std::min(bottleneck, residual(u, v));
      v = u;
    }
    for (std::size_t v = t_node(); v != 0;) {
      std::size_t u = std::size_t(parent[v]);
      push(u, v, bottleneck);
      v = u;
    }
    shipped += bottleneck;

    double cap = dist[t_node()];
    for (std::size_t v = 0; v < n_nodes_; ++v) pot_[v] += std::min(dist[v], cap);
    return true;
  }

  void relax_from(std::size_t u, std::vector<double>& dist, std::vector<int>& parent) {
    auto relax = [&](std::size_t v, double arc_cost) {
      double reduced = arc_cost + pot_[u] - pot_[v];
      if (dist[u] + reduced < dist[v] - 1e-15) {
        dist[v] = dist[u] + reduced;
        parent[v] = int(u);
      }
    };
    if (u == 0) {
      for (std::size_t i = 0; i < a_; ++i)
        if (supply_[i] - flow_src_[i] > kMassEps) relax(src_node(i), 0.0);
    } else if (u >= 1 && u < 1 + a_) {
      std::size_t i = u - 1;
      if (flow_src_[i] > kMassEps) relax(0, 0.0);
      for (std::size_t j = 0; j < b_; ++j) relax(dst_node(j), cost_[i][j]);
    } else if (u < 1 + a_ + b_) {
      std::size_t j = u - 1 - a_;
      if (demand_[j] - flow_dst_[j] > kMassEps) relax(t_node(), 0.0);
      for (std::size_t i = 0; i < a_; ++i)
        if (flow_[i][j] > kMassEps) relax(src_node(i), -cost_[i][j]);
    } else {
      for (std::size_t j = 0; j < b_; ++j)
        if (flow_dst_[j] > kMassEps) relax(dst_node(j), 0.0);
    }
  }

  double residual(std::size_t u, std::size_t v) const {
    const double kInf = std::numeric_limits<double>::infinity();
    if (u == 0) return supply_[v - 1] - flow_src_[v - 1];
    if (v == t_node()) return demand_[u - 1 - a_] - flow_dst_[u - 1 - a_];
    if (u < 1 + a_) return kInf;                 // forward source -> sink
    return flow_[v - 1][u - 1 - a_];             // backward sink -> source
  }

  void push(std::size_t u, std::size_t v, double amount) {
    if (u == 0) {
      flow_src_[v - 1] += amount;
    } else if (v == t_node()) {
      flow_dst_[u - 1 - a_] += amount;
    } else if (u < 1 + a_) {
      flow_[u - 1][v - 1 - a_] += amount;
    } else {
      flow_[v - 1][u - 1 - a_] -= amount;
    }
  }

  std::size_t a_, b_, n_nodes_;
  const std::vector<double>& supply_;
  const std::vector<double>& demand_;
  const std::vector<std::vector<double>>& cost_;
  std::vector<double> flow_src_, flow_dst_;
  std::vector<std::vector<double>> flow_;
  std::vector<double> pot_;
};

}  // namespace

double transport_min_cost(const std::vector<double>& supply, const std::vector<double>& demand,
                          const std::vector<std::vector<double>>& cost) {
  if (supply.empty() || demand.empty()) return 0.0;
  return TransportSolver(supply, demand, cost).solve();
}

}  // namespace stablegraphs::detail
