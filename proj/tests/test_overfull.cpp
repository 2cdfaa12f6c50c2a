#include <doctest.h>

#include "ecol/builtins.hpp"
#include "ecol/overfull.hpp"
#include "support.hpp"

using namespace ecol;

TEST_CASE("overfull and deficiency examples") {
  CHECK(is_overfull(complete_graph(3), 2));
  CHECK_FALSE(is_overfull(cycle_graph(4), 2));
  CHECK_FALSE(is_overfull(petersen_minus_vertex(), 3));
  CHECK(deficiency(complete_graph(3), 2) == 0);
  CHECK(deficiency(cycle_graph(5), 2) == 0);
  CHECK(is_overfull(cycle_graph(5)));
  CHECK(deficiency(petersen_minus_vertex(), 3) == 3);
  CHECK(is_overfull(complete_graph(5)));
}

TEST_CASE("reference below the maximum degree is a contract violation") {
  CHECK_THROWS_AS(is_overfull(complete_graph(4), 2), std::invalid_argument);
  CHECK_THROWS_AS(deficiency(complete_graph(4), 2), std::invalid_argument);
}

TEST_CASE("overfull implies odd order and matches deficiency on odd orders") {
  testing::Rng rng(2024);
  for (int round = 0; round < 2000; ++round) {
    Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng.below(11)), static_cast<int>(rng.below(101)));
    for (int d = g.max_degree(); d <= g.max_degree() + 2; ++d) {
      bool of = is_overfull(g, d);
      if (of) CHECK(g.order() % 2 == 1);
      if (g.order() % 2 == 1) CHECK(of == (deficiency(g, d) < d));
      long direct = 0;
      for (Vertex v = 0; v < g.order(); ++v) direct += d - g.degree(v);
      CHECK(deficiency(g, d) == direct);
    }
  }
}

TEST_CASE("subgraph search examples") {
  CHECK(find_overfull_subgraphs(petersen_minus_vertex()).empty());
  CHECK(find_overfull_subgraphs(complete_graph(5)) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
  CHECK(find_overfull_subgraphs(cycle_graph(7)) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5, 6}});
  CHECK(find_overfull_subgraphs(cycle_graph(7)) == testing::oracle_overfull_subgraphs(cycle_graph(7)));
  CHECK(find_overfull_subgraphs(Graph(5)).empty());
}

TEST_CASE("subgraph search refuses above the cap") {
  CHECK_THROWS_AS(find_overfull_subgraphs(cycle_graph(21)), SearchRefused);
  CHECK_THROWS_AS(find_overfull_subgraphs(cycle_graph(9), 8), SearchRefused);
  CHECK_NOTHROW(find_overfull_subgraphs(cycle_graph(9), 9));
}

TEST_CASE("subgraph search agrees with subset enumeration") {
  testing::Rng rng(99);
  for (int round = 0; round < 400; ++round) {
    Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng.below(11)), 30 + static_cast<int>(rng.below(70)));
    REQUIRE(find_overfull_subgraphs(g) == testing::oracle_overfull_subgraphs(g));
  }
}

TEST_CASE("whole graph is listed exactly when it is overfull and odd") {
  for (const Graph& g : testing::corpus_graphs(7)) {
    auto subs = find_overfull_subgraphs(g);
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.order(); ++v) all.push_back(v);
    bool listed = std::find(subs.begin(), subs.end(), all) != subs.end();
    CHECK(listed == (g.size() > 0 && is_overfull(g)));
  }
}
