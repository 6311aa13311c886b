#include "stablegraphs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>

#include "stablegraphs/rng.hpp"

namespace stablegraphs {

EdgeId::EdgeId(VertexId a, VertexId b) {
  if (a == b) throw ValidationError("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph::Graph(std::uint32_t n, std::vector<EdgeId> edges)
    : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (edges_[i] == edges_[i + 1]) {
      throw ValidationError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                            std::to_string(edges_[i].v) + ")");
    }
  }
  for (const EdgeId& e : edges_) {
    if (e.v >= n_) throw ValidationError("edge endpoint " + std::to_string(e.v) + " out of range");
  }
  build_adjacency();
}

Graph::Graph(std::uint32_t n, std::vector<EdgeId> edges, std::vector<double> weights) {
  if (edges.size() != weights.size()) throw ValidationError("weight vector size mismatch");
  std::vector<std::pair<EdgeId, double>> zipped(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) zipped[i] = {edges[i], weights[i]};
  std::sort(zipped.begin(), zipped.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EdgeId> es(zipped.size());
  std::vector<double> ws(zipped.size());
  for (std::size_t i = 0; i < zipped.size(); ++i) {
    es[i] = zipped[i].first;
    ws[i] = zipped[i].second;
  }
  *this = Graph(n, std::move(es));
  weights_ = std::move(ws);
}

void Graph::build_adjacency() {
  adj_.assign(n_, {});
  for (const EdgeId& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Graph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw ValidationError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") not in graph");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

double Graph::weight(EdgeId e) const { return weight_at(edge_index(e)); }

std::uint32_t Graph::degree(VertexId v) const {
  return static_cast<std::uint32_t>(adj_.at(v).size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const { return adj_.at(v); }

Graph Graph::remove_edge(EdgeId e) const {
  std::size_t idx = edge_index(e);
  std::vector<EdgeId> es = edges_;
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(idx));
  if (weights_.empty()) return Graph(n_, std::move(es));
  std::vector<double> ws = weights_;
  ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(idx));
  return Graph(n_, std::move(es), std::move(ws));
}

Graph Graph::without_vertices(const std::vector<bool>& removed) const {
  std::vector<EdgeId> es;
  std::vector<double> ws;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const EdgeId& e = edges_[i];
    if (removed[e.u] || removed[e.v]) continue;
    es.push_back(e);
    if (!weights_.empty()) ws.push_back(weights_[i]);
  }
  if (weights_.empty()) return Graph(n_, std::move(es));
  return Graph(n_, std::move(es), std::move(ws));
}

std::uint32_t Graph::component_count() const {
  std::vector<bool> seen(n_, false);
  std::uint32_t components = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint32_t parse_u32(std::string_view tok, int line_no) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected nonnegative integer, got '" + std::string(tok) + "'", line_no);
  }
  return value;
}

double parse_weight(std::string_view tok, int line_no) {
  try {
    std::size_t pos = 0;
    double w = std::stod(std::string(tok), &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return w;
  } catch (const std::exception&) {
    throw ParseError("expected weight, got '" + std::string(tok) + "'", line_no);
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::uint32_t declared_n = 0;
  std::uint32_t max_id_plus1 = 0;
  std::vector<EdgeId> edges;
  std::vector<double> weights;
  bool any_weight = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw ParseError("header must be 'n <count>'", line_no);
      declared_n = std::max(declared_n, parse_u32(tokens[1], line_no));
      continue;
    }
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'u v' or 'u v w'", line_no);
    }
    std::uint32_t a = parse_u32(tokens[0], line_no);
    std::uint32_t b = parse_u32(tokens[1], line_no);
    if (a == b) throw ValidationError("self-loop at line " + std::to_string(line_no));
    edges.emplace_back(a, b);
    if (tokens.size() == 3) {
      any_weight = true;
      weights.resize(edges.size() - 1, 1.0);
      weights.push_back(parse_weight(tokens[2], line_no));
    } else if (any_weight) {
      weights.push_back(1.0);
    }
    max_id_plus1 = std::max(max_id_plus1, std::max(a, b) + 1);
  }

  std::uint32_t n = std::max(declared_n, max_id_plus1);
  if (any_weight) return Graph(n, std::move(edges), std::move(weights));
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  char buf[64];
  for (std::size_t i = 0; i < g.m(); ++i) {
    const EdgeId& e = g.edges()[i];
    out += std::to_string(e.u) + " " + std::to_string(e.v);
    if (g.weighted()) {
      std::snprintf(buf, sizeof(buf), " %.17g", g.weight_at(i));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = stable_hash(0x67726170ULL, {g.n(), g.m()});
  for (std::size_t i = 0; i < g.m(); ++i) {
    const EdgeId& e = g.edges()[i];
    std::uint64_t w_bits = 0;
    if (g.weighted()) {
      double w = g.weight_at(i);
      static_assert(sizeof(w) == sizeof(w_bits));
      __builtin_memcpy(&w_bits, &w, sizeof(w));
    }
    h = stable_hash(h, {e.u, e.v, w_bits});
  }
  return h;
}

Graph generate_path(std::uint32_t n) {
  if (n < 1) throw ParameterError("path requires n >= 1");
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph generate_cycle(std::uint32_t n) {
  if (n < 3) throw ParameterError("cycle requires n >= 3");
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph generate_complete(std::uint32_t n) {
  if (n < 1) throw ParameterError("complete requires n >= 1");
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph generate_star(std::uint32_t n) {
  if (n < 2) throw ParameterError("star requires n >= 2");
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

Graph generate_prim_adversarial(std::uint32_t n) {
  if (n < 8 || n % 2 != 0) throw ParameterError("prim_adversarial requires even n >= 8");
  // 1-indexed construction, shifted down by one for 0-indexed ids.
  std::uint32_t half = n / 2;
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 1; i + 1 <= half - 1; ++i) edges.emplace_back(i - 1, i);  // (i, i+1)
  edges.emplace_back(0, half - 1);                                                 // (1, n/2)
  for (std::uint32_t j = half + 1; j <= n; ++j) {
    edges.emplace_back(half - 2, j - 1);  // (n/2 - 1, j)
    edges.emplace_back(half - 1, j - 1);  // (n/2, j)
  }
  Graph g(n, std::move(edges));
  if (g.m() != 3ull * n / 2 - 1) throw Error("prim_adversarial edge count mismatch");
  return g;
}

Graph generate_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ParameterError("erdos_renyi requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("erdos_renyi requires p in [0,1]");
  Rng rng(stable_hash(seed, {0x6572ULL, n}));
  std::vector<EdgeId> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph generate(const std::string& family, const GeneratorParams& params) {
  if (family == "path") return generate_path(params.n);
  if (family == "cycle") return generate_cycle(params.n);
  if (family == "complete") return generate_complete(params.n);
  if (family == "star") return generate_star(params.n);
  if (family == "prim_adversarial") return generate_prim_adversarial(params.n);
  if (family == "erdos_renyi") return generate_erdos_renyi(params.n, params.p, params.seed);
  throw ParameterError("unknown graph family '" + family + "'");
}

}  // namespace stablegraphs
