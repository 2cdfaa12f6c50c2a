#include <doctest.h>

#include "ecol/builtins.hpp"
#include "ecol/solver.hpp"
#include "ecol/structures.hpp"
#include "support.hpp"

using namespace ecol;

namespace {

PartialColoring c5_example() {
  return PartialColoring::from_edges(cycle_graph(5), 2, {{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 1}, {{0, 4}, 2}});
}

// a=0 b=1 u=2 s1=3 s2=4 t1=5 t2=6 plus a pendant z=7 at a.
Graph fork_tree() {
  return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {0, 7}});
}

PartialColoring fork_coloring(Color az) {
  return PartialColoring::from_edges(fork_tree(), 3,
                                     {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{3, 5}, 1}, {{4, 6}, 2}, {{0, 7}, az}});
}

PartialColoring random_partial(testing::Rng& rng, const Graph& g) {
  for (;;) {
    Edge e = g.edge(static_cast<EdgeId>(rng.below(g.size())));
    auto s = enumerate_colorings(g, e, g.max_degree(), 1, rng.next());
    if (!s.colorings.empty()) return s.colorings.front();
    s = enumerate_colorings(g, e, g.max_degree() + 1, 1, rng.next());
    if (!s.colorings.empty()) return s.colorings.front();
  }
}

Sequence prefix(const Sequence& s, std::size_t edges) {
  return {{s.vertices.begin(), s.vertices.begin() + static_cast<std::ptrdiff_t>(edges + 1)},
          {s.edges.begin(), s.edges.begin() + static_cast<std::ptrdiff_t>(edges)}};
}

}  // namespace

TEST_CASE("maximal multi-fan examples") {
  auto c = c5_example();
  MultiFan f = maximal_multifan(c, 0);
  CHECK(f.seq.vertices == std::vector<Vertex>{0, 1, 4});
  CHECK(f.seq.edges == std::vector<Edge>{{0, 1}, {0, 4}});
  CHECK(f.witness == std::vector<int>{-1, 1});
  CHECK(format_multifan(c, f) == "multifan v=0,1,4 c=-,2 w=-,1");
  CHECK_THROWS_AS(maximal_multifan(c, 3), std::invalid_argument);

  // Star: x = 0, leaves 1..4, e = 01, other edges colored 1..3.
  auto star = PartialColoring::from_edges(star_graph(4), 4, {{{0, 2}, 1}, {{0, 3}, 2}, {{0, 4}, 3}});
  CHECK(maximal_multifan(star, 0).seq.vertices.size() == 5);

  auto pend = PartialColoring::from_edges(path_graph(3), 2, {{{1, 2}, 1}});
  CHECK(maximal_multifan(pend, 0).seq.vertices == std::vector<Vertex>{0, 1});
}

TEST_CASE("multi-fan validation") {
  auto c = c5_example();
  Sequence good = maximal_multifan(c, 0).seq;
  CHECK_FALSE(validate_multifan(c, good).has_value());
  Sequence dup = good;
  dup.vertices.push_back(4);
  dup.edges.push_back({0, 4});
  auto v = validate_multifan(c, dup);
  REQUIRE(v.has_value());
  CHECK(v->condition == "F1");
  CHECK(v->index == 3);

  // In C5 with three colors, 04 colored 3 is missing at neither 1 nor earlier.
  auto c3 = PartialColoring::from_edges(cycle_graph(5), 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 1}, {{0, 4}, 3}});
  Sequence bad{{0, 1, 4}, {{0, 1}, {0, 4}}};
  // φ̄(1) = {2,3}, so 3 is a valid witness: switch 12 to use 3 instead.
  CHECK_FALSE(validate_multifan(c3, bad).has_value());
  auto c3b = PartialColoring::from_edges(cycle_graph(5), 3, {{{1, 2}, 3}, {{2, 3}, 2}, {{3, 4}, 1}, {{0, 4}, 3}});
  auto f2 = validate_multifan(c3b, bad);
  REQUIRE(f2.has_value());
  CHECK(f2->condition == "F2");
  CHECK(f2->index == 2);
}

TEST_CASE("kierstead paths on the C5 example") {
  auto c = c5_example();
  auto p1 = find_kierstead_paths(c, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].seq.vertices == std::vector<Vertex>{0, 1});
  CHECK(p1[1].seq.vertices == std::vector<Vertex>{1, 0});
  auto p2 = find_kierstead_paths(c, 2);
  std::vector<std::vector<Vertex>> got;
  for (const auto& k : p2) got.push_back(k.seq.vertices);
  CHECK(got == std::vector<std::vector<Vertex>>{{0, 1}, {0, 1, 2}, {1, 0}, {1, 0, 4}});
  CHECK(format_kierstead(c, p2[1]) == "kierstead v=0,1,2 c=-,1 w=-,0");
  CHECK(parse_sequence(format_kierstead(c, p2[1])) == p2[1].seq);

  Sequence revisit{{0, 1, 2, 1}, {{0, 1}, {1, 2}, {1, 2}}};
  auto v = validate_kierstead_path(c, revisit);
  REQUIRE(v.has_value());
  CHECK(v->condition == "K1");

  auto dead = PartialColoring::from_edges(Graph(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}}), 2,
                                          {{{1, 2}, 1}, {{0, 3}, 1}, {{2, 3}, 2}});
  // φ̄(0) = {2}, φ̄(1) = {2}; 12 and 03 carry 1.
  for (const auto& k : find_kierstead_paths(dead, 2)) CHECK(k.seq.length() == 1);
}

TEST_CASE("hand-built fork is found exactly, and a perturbed one is not") {
  auto c = fork_coloring(3);
  auto forks = find_forks(c);
  REQUIRE(forks.size() == 1);
  const ForkConfig& f = forks.front();
  CHECK(f.a == 0);
  CHECK(f.b == 1);
  CHECK(f.u == 2);
  CHECK(f.s1 == 3);
  CHECK(f.s2 == 4);
  CHECK(f.t1 == 5);
  CHECK(f.t2 == 6);
  CHECK(is_fork(c, f));
  std::string text = format_fork(f);
  CHECK(text == "fork a=0 b=1 u=2 s1=3 s2=4 t1=5 t2=6 bu=1 us1=2 us2=3 s1t1=1 s2t2=2");
  ForkConfig back = parse_fork(c, text);
  CHECK(format_fork(back) == text);

  CHECK(find_forks(fork_coloring(1)).empty());
  CHECK(find_forks(c5_example()).empty());
}

TEST_CASE("hand-built branches") {
  // Long form: tree a=0 b=1 u=2 s1=3 s2=4 t1=5 t2=6, s1t1 = s2t2.
  Graph tree(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}});
  auto c = PartialColoring::from_edges(tree, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{3, 5}, 1}, {{4, 6}, 1}});
  auto br = find_branches(c, false);
  REQUIRE(br.size() == 1);
  CHECK(br.front().t1 == 5);
  CHECK(br.front().t2 == 6);
  CHECK(is_branch(c, br.front()));
  auto [k1, k2] = branch_paths(br.front());
  CHECK_FALSE(validate_kierstead_path(c, k1).has_value());
  CHECK_FALSE(validate_kierstead_path(c, k2).has_value());
  CHECK(format_branch(br.front()) == "branch a=0 b=1 u=2 s1=3 s2=4 t1=5 t2=6 bu=1 us1=2 us2=3 s1t1=1 s2t2=1");
  CHECK(format_branch(parse_branch(c, format_branch(br.front()))) == format_branch(br.front()));

  // Unequal end colors are filtered out.
  auto uneq = PartialColoring::from_edges(tree, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{3, 5}, 1}, {{4, 6}, 2}});
  CHECK(find_branches(uneq, false).empty());

  // Short form on a=0 b=1 u=2 x=3 y=4.
  Graph shrt(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  auto s = PartialColoring::from_edges(shrt, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}});
  auto sb = find_branches(s, true);
  REQUIRE(sb.size() == 1);
  CHECK(format_branch(sb.front()) == "short-branch a=0 b=1 u=2 x=3 y=4 bu=1 ux=2 uy=3");
  auto k4 = PartialColoring::from_edges(complete_graph(4), 3,
                                       {{{0, 2}, 1}, {{0, 3}, 2}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 3}, 3}});
  CHECK(find_branches(k4, true).empty());
}

TEST_CASE("detector output validates, prefixes validate, and fans are maximal") {
  testing::Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    Graph g = testing::random_connected_graph(rng, 3 + static_cast<int>(rng.below(6)), 55);
    PartialColoring c = random_partial(rng, g);
    const Edge e = g.edge(*c.uncolored());
    for (Vertex x : {e.u, e.v}) {
      MultiFan f = maximal_multifan(c, x);
      for (std::size_t p = 1; p <= f.seq.length(); ++p) CHECK_FALSE(validate_multifan(c, prefix(f.seq, p)).has_value());
      // No single edge at x extends the fan.
      for (Vertex y : g.neighbors(x)) {
        if (std::find(f.seq.vertices.begin(), f.seq.vertices.end(), y) != f.seq.vertices.end()) continue;
        Sequence longer = f.seq;
        longer.vertices.push_back(y);
        longer.edges.push_back(make_edge(x, y));
        CHECK(validate_multifan(c, longer).has_value());
      }
    }
    for (const KiersteadPath& k : find_kierstead_paths(c, 4)) {
      CHECK_FALSE(validate_kierstead_path(c, k.seq).has_value());
      if (k.seq.length() >= 2) {
        CHECK_FALSE(validate_multifan(c, prefix(k.seq, 1)).has_value());
        // y0 y1 y2 read as a fan at y1.
        Sequence fan{{k.seq.vertices[1], k.seq.vertices[0], k.seq.vertices[2]}, {k.seq.edges[0], k.seq.edges[1]}};
        CHECK_FALSE(validate_multifan(c, fan).has_value());
      }
    }
    for (const ForkConfig& f : find_forks(c)) CHECK(is_fork(c, f));
    for (bool shrt : {false, true})
      for (const BranchConfig& b : find_branches(c, shrt)) CHECK(is_branch(c, b));
  }
}
