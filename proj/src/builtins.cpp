#include "ecol/builtins.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ecol {

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.push_back({i, a + j});
  return Graph(a + b, es);
}

Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(make_edge(i, (i + 1) % 5));
    es.push_back(make_edge(i, i + 5));
    es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, es);
}

Graph petersen_minus_vertex() {
  std::vector<Vertex> keep(9);
  std::iota(keep.begin(), keep.end(), 1);
  return induced_subgraph(petersen_graph(), keep).graph;
}

namespace {

std::optional<int> parse_count(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0 || v > 4096) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Graph> named_graph(std::string_view key) {
  if (key == "petersen") return petersen_graph();
  if (key == "petersen_minus_vertex") return petersen_minus_vertex();
  try {
    if (key.starts_with("star")) {
      if (auto k = parse_count(key.substr(4))) return star_graph(*k);
      return std::nullopt;
    }
    if (key.size() < 2) return std::nullopt;
    auto rest = key.substr(1);
    switch (key[0]) {
      case 'K':
        if (auto comma = rest.find(','); comma != std::string_view::npos) {
          auto a = parse_count(rest.substr(0, comma));
          auto b = parse_count(rest.substr(comma + 1));
          if (a && b) return complete_bipartite(*a, *b);
          return std::nullopt;
        }
        if (auto n = parse_count(rest)) return complete_graph(*n);
        break;
      case 'C':
        if (auto n = parse_count(rest)) return cycle_graph(*n);
        break;
      case 'P':
        if (auto n = parse_count(rest)) return path_graph(*n);
        break;
      default:
        break;
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> named_graph_keys() {
  return {"K3", "K5", "C5", "C7", "petersen", "petersen_minus_vertex"};
}

}  // namespace ecol
