#include "ecol/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace ecol {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  build();
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u == raw.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(raw.u));
    Edge e = make_edge(raw.u, raw.v);
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge " + to_string(e) + " out of range");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw std::invalid_argument("parallel edge " + to_string(*dup));
  build();
}

void Graph::build() {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbrs_.assign(offsets_[n], 0);
  inc_.assign(offsets_[n], 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are lexicographic: for fixed v every (u, v) with u < v precedes
  // every (v, w), so each neighbor list is filled in sorted order.
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    auto u = static_cast<std::size_t>(e.u);
    auto v = static_cast<std::size_t>(e.v);
    nbrs_[fill[u]] = e.v;
    inc_[fill[u]++] = static_cast<EdgeId>(id);
    nbrs_[fill[v]] = e.u;
    inc_[fill[v]++] = static_cast<EdgeId>(id);
  }
  max_degree_ = 0;
  min_degree_ = n_ == 0 ? 0 : static_cast<int>(deg[0]);
  for (std::size_t d : deg) {
    max_degree_ = std::max(max_degree_, static_cast<int>(d));
    min_degree_ = std::min(min_degree_, static_cast<int>(d));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  auto i = static_cast<std::size_t>(v);
  return {nbrs_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::span<const EdgeId> Graph::incident(Vertex v) const {
  auto i = static_cast<std::size_t>(v);
  return {inc_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident(a)[static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::without_edge(EdgeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= edges_.size())
    throw std::invalid_argument("edge id out of range");
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (static_cast<EdgeId>(i) != id) rest.push_back(edges_[i]);
  return Graph(n_, rest);
}

DegreeSummary degree_stats(const Graph& g) {
  DegreeSummary s;
  s.max_degree = g.max_degree();
  s.min_degree = g.min_degree();
  s.sequence.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) s.sequence.push_back(g.degree(v));
  std::sort(s.sequence.begin(), s.sequence.end(), std::greater<>());
  return s;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  InducedSubgraph out;
  out.original.assign(vs.begin(), vs.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  if (out.original.empty()) throw std::invalid_argument("induced subgraph needs at least one vertex");
  std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    Vertex v = out.original[i];
    if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    int a = relabel[static_cast<std::size_t>(e.u)];
    int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back(make_edge(a, b));
  }
  out.graph = Graph(static_cast<int>(out.original.size()), kept);
  return out;
}

}  // namespace ecol
