#include "ecol/overfull.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecol {

namespace {

int checked_reference(const Graph& g, std::optional<int> delta_ref) {
  int d = delta_ref.value_or(g.max_degree());
  if (d < g.max_degree())
    throw std::invalid_argument("reference degree " + std::to_string(d) + " below max degree " +
                                std::to_string(g.max_degree()));
  return d;
}

struct OverfullSearch {
  const Graph& g;
  int delta;
  // 1 = in S, 0 = out, -1 = undecided.
  std::vector<int> state;
  // Per member: delta - d_G(v) + (#neighbours already excluded).
  std::vector<int> committed;
  long committed_total = 0;
  std::vector<Vertex> members;
  std::vector<std::vector<Vertex>> found;

  void exclude(Vertex v, int sign) {
    for (Vertex w : g.neighbors(v)) {
      if (state[static_cast<std::size_t>(w)] == 1) {
        committed[static_cast<std::size_t>(w)] += sign;
        committed_total += sign;
      }
    }
  }

  int include(Vertex v) {
    int c = delta - g.degree(v);
    for (Vertex w : g.neighbors(v))
      if (w < v && state[static_cast<std::size_t>(w)] == 0) ++c;
    return c;
  }

  void record() {
    if (members.size() % 2 == 0) return;
    if (committed_total >= delta) return;
    // Δ(H) = Δ(G): some member keeps its full degree inside S.
    bool full = std::any_of(members.begin(), members.end(), [&](Vertex v) {
      return g.degree(v) == delta && committed[static_cast<std::size_t>(v)] == 0;
    });
    if (full) found.push_back(members);
  }

  void run(Vertex v) {
    if (committed_total >= delta) return;
    if (v == g.order()) {
      record();
      return;
    }
    auto i = static_cast<std::size_t>(v);
    // Include v.
    int c = include(v);
    state[i] = 1;
    committed[i] = c;
    committed_total += c;
    members.push_back(v);
    run(v + 1);
    members.pop_back();
    committed_total -= c;
    committed[i] = 0;
    // Exclude v.
    state[i] = 0;
    exclude(v, +1);
    run(v + 1);
    exclude(v, -1);
    state[i] = -1;
  }
};

}  // namespace

bool is_overfull(const Graph& g, std::optional<int> delta_ref) {
  long d = checked_reference(g, delta_ref);
  return static_cast<long>(g.size()) > d * (g.order() / 2);
}

long deficiency(const Graph& g, std::optional<int> delta_ref) {
  long d = checked_reference(g, delta_ref);
  return d * g.order() - 2 * static_cast<long>(g.size());
}

std::vector<std::vector<Vertex>> find_overfull_subgraphs(const Graph& g, int cap) {
  if (g.order() > cap)
    throw SearchRefused("overfull subgraph search refused: n=" + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(cap));
  OverfullSearch s{g, g.max_degree(), std::vector<int>(static_cast<std::size_t>(g.order()), -1),
                   std::vector<int>(static_cast<std::size_t>(g.order()), 0), 0, {}, {}};
  if (g.size() == 0) return {};
  s.run(0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

}  // namespace ecol
