#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ecol/builtins.hpp"
#include "ecol/graph.hpp"
#include "support.hpp"

using namespace ecol;

TEST_CASE("construction rejects loops, parallels and bad endpoints") {
  CHECK_THROWS_AS((Graph(3, {{0, 0}})), std::invalid_argument);
  CHECK_THROWS_AS((Graph(3, {{0, 1}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS((Graph(3, {{0, 3}})), std::invalid_argument);
  CHECK_THROWS_AS((Graph(3, {{-1, 2}})), std::invalid_argument);
}

TEST_CASE("edges are canonical and adjacency agrees with the edge set") {
  Graph g(4, {{2, 1}, {3, 0}, {0, 1}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{1, 2});
  testing::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    Graph h = testing::random_graph(rng, 1 + static_cast<int>(rng.below(12)), 40);
    std::size_t total = 0;
    for (Vertex v = 0; v < h.order(); ++v) {
      auto nb = h.neighbors(v);
      auto inc = h.incident(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(h.degree(v) == static_cast<int>(nb.size()));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        CHECK(h.edge(inc[i]) == make_edge(v, nb[i]));
        CHECK(h.find_edge(v, nb[i]) == inc[i]);
      }
      total += nb.size();
    }
    CHECK(total == 2 * h.size());
  }
}

TEST_CASE("without_edge drops exactly one edge") {
  Graph k4 = complete_graph(4);
  Graph h = k4.without_edge(*k4.find_edge(1, 2));
  CHECK(h.size() == 5);
  CHECK_FALSE(h.adjacent(1, 2));
  CHECK(h.adjacent(0, 3));
}

TEST_CASE("degree_stats") {
  auto k3 = degree_stats(complete_graph(3));
  CHECK(k3.max_degree == 2);
  CHECK(k3.min_degree == 2);
  auto star = degree_stats(star_graph(4));
  CHECK(star.max_degree == 4);
  CHECK(star.min_degree == 1);
  CHECK(star.sequence == std::vector<int>{4, 1, 1, 1, 1});
  auto pstar = degree_stats(petersen_minus_vertex());
  CHECK(pstar.max_degree == 3);
  CHECK(pstar.min_degree == 2);
  CHECK(std::count(pstar.sequence.begin(), pstar.sequence.end(), 2) == 3);
}

TEST_CASE("degree sequence sums to twice the edge count on random graphs") {
  testing::Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng.below(10)), 50);
    auto s = degree_stats(g);
    CHECK(std::accumulate(s.sequence.begin(), s.sequence.end(), 0) == static_cast<int>(2 * g.size()));
    CHECK(s.min_degree <= s.max_degree);
    CHECK(s.max_degree <= std::max(0, g.order() - 1));
    CHECK(std::is_sorted(s.sequence.rbegin(), s.sequence.rend()));
  }
}

TEST_CASE("induced_subgraph") {
  std::vector<Vertex> three{1, 2, 3};
  CHECK(induced_subgraph(complete_graph(4), three).graph == complete_graph(3));
  auto p = induced_subgraph(cycle_graph(5), three);
  CHECK(p.graph == path_graph(3));
  CHECK(p.original == three);
  Graph pstar = petersen_minus_vertex();
  std::vector<Vertex> all(9);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_subgraph(pstar, all).graph == pstar);
  std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(pstar, bad), std::invalid_argument);
}

TEST_CASE("connectivity and bipartiteness") {
  CHECK(is_connected(cycle_graph(6)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(7)));
  CHECK(is_bipartite(complete_bipartite(3, 4)));
  CHECK_FALSE(is_bipartite(petersen_graph()));
}

TEST_CASE("built-in families") {
  Graph p = petersen_graph();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.min_degree() == 3);
  CHECK(p.max_degree() == 3);
  Graph ps = petersen_minus_vertex();
  CHECK(ps.order() == 9);
  CHECK(ps.size() == 12);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(named_graph("K5") == complete_graph(5));
  CHECK(named_graph("C7") == cycle_graph(7));
  CHECK(named_graph("petersen_minus_vertex") == ps);
  CHECK(named_graph("K3,3") == complete_bipartite(3, 3));
  CHECK_FALSE(named_graph("nonsense").has_value());
  for (const std::string& key : named_graph_keys()) CHECK(named_graph(key).has_value());
}
