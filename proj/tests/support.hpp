#ifndef ECOL_TESTS_SUPPORT_HPP
#define ECOL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecol/graph.hpp"
#include "ecol/graph6.hpp"

namespace ecol::testing {

/// splitmix64; small and reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::uint64_t s_;
};

inline Graph random_graph(Rng& rng, int n, int percent) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(percent)) es.push_back({u, v});
  return Graph(n, es);
}

inline Graph random_connected_graph(Rng& rng, int n, int percent) {
  for (;;) {
    Graph g = random_graph(rng, n, percent);
    if (is_connected(g)) return g;
  }
}

inline std::vector<std::string> corpus_records(int max_n = 8) {
  std::ifstream in(ECOL_CORPUS_PATH);
  if (!in) throw std::runtime_error("corpus missing: " ECOL_CORPUS_PATH);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (line[0] - 63 <= max_n) out.push_back(line);
  }
  return out;
}

inline std::vector<Graph> corpus_graphs(int max_n = 8) {
  std::vector<Graph> out;
  for (const auto& r : corpus_records(max_n)) out.push_back(parse_graph6(r));
  return out;
}

// --- oracles ----------------------------------------------------------------

inline bool oracle_proper(const Graph& g, const std::vector<int>& colors, int k) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (colors[i] < 0 || colors[i] > k) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Edge& a = g.edges()[i];
      const Edge& b = g.edges()[j];
      bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (touch && colors[i] != 0 && colors[i] == colors[j]) return false;
    }
  }
  return true;
}

namespace detail {

// Plain recursion in edge-id order, every color tried for every edge, no
// symmetry breaking or lookahead; an edge is rejected only if it clashes
// with an already colored neighbor edge.
inline bool try_all(const Graph& g, int k, std::size_t i, std::vector<int>& colors) {
  if (i == g.size()) return true;
  const Edge& e = g.edges()[i];
  for (int c = 1; c <= k; ++c) {
    bool clash = false;
    for (std::size_t j = 0; j < i && !clash; ++j) {
      const Edge& f = g.edges()[j];
      clash = colors[j] == c && (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v);
    }
    if (clash) continue;
    colors[i] = c;
    if (try_all(g, k, i + 1, colors)) return true;
  }
  colors[i] = 0;
  return false;
}

}  // namespace detail

inline int oracle_chromatic_index(const Graph& g) {
  for (int k = 0;; ++k) {
    std::vector<int> colors(g.size(), 0);
    if (detail::try_all(g, k, 0, colors)) return k;
  }
}

inline int oracle_max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) {
    int c = 0;
    for (const Edge& e : g.edges()) c += e.u == v || e.v == v;
    d = std::max(d, c);
  }
  return d;
}

/// Every odd vertex subset S with Δ(G[S]) = Δ(G) and |E(G[S])| > Δ(G)⌊|S|/2⌋,
/// by plain subset enumeration.
inline std::vector<std::vector<Vertex>> oracle_overfull_subgraphs(const Graph& g) {
  const int n = g.order();
  const int delta = oracle_max_degree(g);
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size % 2 == 0) continue;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    long m = 0;
    for (const Edge& e : g.edges()) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
        ++m;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
      }
    }
    if (*std::max_element(deg.begin(), deg.end()) != delta) continue;
    if (m <= static_cast<long>(delta) * (size / 2)) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ecol::testing

#endif  // ECOL_TESTS_SUPPORT_HPP
