#ifndef ECOL_GRAPH_HPP
#define ECOL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecol {

using Vertex = int;
using EdgeId = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

  bool has(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
};

/// Builds the canonical (min, max) form of {a, b}.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept in lexicographic order and
/// an edge's id is its index in that order; neighbor lists are sorted and
/// carry the id of the connecting edge alongside each neighbor.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const Vertex> neighbors(Vertex v) const;
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// G - e, same vertex set. Edge ids above `id` shift down by one.
  Graph without_edge(EdgeId id) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbrs_;
  std::vector<EdgeId> inc_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

struct DegreeSummary {
  int max_degree = 0;
  int min_degree = 0;
  std::vector<int> sequence;  // non-increasing
};

DegreeSummary degree_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Induced subgraph with vertices relabeled 0..|vs|-1 in increasing order of
/// their original label.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new label -> original label
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

}  // namespace ecol

#endif  // ECOL_GRAPH_HPP
