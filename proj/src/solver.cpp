#include "ecol/solver.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>

namespace ecol {

const char* to_string(ClassLabel c) { return c == ClassLabel::Class1 ? "Class 1" : "Class 2"; }

namespace {

// Highest max-endpoint-degree first, then lexicographic endpoints.
std::vector<EdgeId> search_order(const Graph& g, std::optional<EdgeId> skip) {
  std::vector<EdgeId> order;
  order.reserve(g.size());
  for (std::size_t id = 0; id < g.size(); ++id)
    if (static_cast<EdgeId>(id) != skip) order.push_back(static_cast<EdgeId>(id));
  auto key = [&](EdgeId id) {
    const Edge& e = g.edge(id);
    return std::max(g.degree(e.u), g.degree(e.v));
  };
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
  return order;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Backtracker {
 public:
  Backtracker(const Graph& g, std::optional<EdgeId> skip, int k)
      : g_(g),
        k_(k),
        order_(search_order(g, skip)),
        colors_(g.size(), kNoColor),
        present_(static_cast<std::size_t>(g.order())),
        pal_(palette(k)),
        pos_(g.size(), -1) {
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("palette size out of range");
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  }

  // Symmetry breaking: color c may be used only if 1..c-1 already are.
  bool symmetric = false;
  std::mt19937_64* rng = nullptr;

  template <typename Visit>
  void run(Visit&& visit) {
    // Each color class is a matching.
    std::size_t pending = 0;
    for (int p : pos_) pending += p >= 0;
    if (pending > static_cast<std::size_t>(k_) * static_cast<std::size_t>(g_.order() / 2)) return;
    for (Vertex v = 0; v < g_.order(); ++v) {
      int d = 0;
      for (EdgeId e : g_.incident(v)) d += pos_[static_cast<std::size_t>(e)] >= 0;
      if (d > k_) return;
    }
    stop_ = false;
    step(0, 0, visit);
  }

  std::span<const Color> colors() const { return colors_; }

 private:
  ColorSet available(EdgeId id) const {
    const Edge& e = g_.edge(id);
    return pal_ & ~(present_[static_cast<std::size_t>(e.u)] | present_[static_cast<std::size_t>(e.v)]);
  }

  void set(EdgeId id, Color c) {
    const Edge& e = g_.edge(id);
    colors_[static_cast<std::size_t>(id)] = c;
    present_[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(c));
    present_[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(c));
  }

  void unset(EdgeId id) {
    const Edge& e = g_.edge(id);
    Color c = colors_[static_cast<std::size_t>(id)];
    colors_[static_cast<std::size_t>(id)] = kNoColor;
    present_[static_cast<std::size_t>(e.u)].reset(static_cast<std::size_t>(c));
    present_[static_cast<std::size_t>(e.v)].reset(static_cast<std::size_t>(c));
  }

  // Every still-uncolored searched edge at either end keeps a free color.
  bool forward_ok(EdgeId id) const {
    const Edge& e = g_.edge(id);
    for (Vertex end : {e.u, e.v}) {
      for (EdgeId f : g_.incident(end)) {
        if (colors_[static_cast<std::size_t>(f)] != kNoColor || pos_[static_cast<std::size_t>(f)] < 0) continue;
        if (available(f).none()) return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void step(std::size_t depth, Color used, Visit& visit) {
    if (stop_) return;
    if (depth == order_.size()) {
      if (!visit(std::span<const Color>(colors_))) stop_ = true;
      return;
    }
    EdgeId id = order_[depth];
    ColorSet avail = available(id);
    std::vector<Color> choices;
    for (Color c : colors_of(avail)) {
      if (symmetric && c > used + 1) break;
      choices.push_back(c);
    }
    if (rng) {
      for (std::size_t i = choices.size(); i > 1; --i) std::swap(choices[i - 1], choices[(*rng)() % i]);
    }
    for (Color c : choices) {
      set(id, c);
      if (forward_ok(id)) step(depth + 1, std::max(used, c), visit);
      unset(id);
      if (stop_) return;
    }
  }

  const Graph& g_;
  int k_;
  std::vector<EdgeId> order_;
  std::vector<Color> colors_;
  std::vector<ColorSet> present_;
  ColorSet pal_;
  std::vector<int> pos_;
  bool stop_ = false;
};

EdgeId require_edge(const Graph& g, Edge e) {
  auto id = g.find_edge(e.u, e.v);
  if (!id) throw std::invalid_argument("edge " + to_string(make_edge(e.u, e.v)) + " not in graph");
  return *id;
}

}  // namespace

std::optional<ColoringCertificate> edge_colorable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative palette size");
  if (g.max_degree() > k) return std::nullopt;
  Backtracker bt(g, std::nullopt, k);
  bt.symmetric = true;
  std::optional<std::vector<Color>> found;
  bt.run([&](std::span<const Color> cs) {
    found.emplace(cs.begin(), cs.end());
    return false;
  });
  if (!found) return std::nullopt;
  int used = found->empty() ? 0 : *std::max_element(found->begin(), found->end());
  return ColoringCertificate{PartialColoring(g, k, *found), used};
}

int chromatic_index(const Graph& g) {
  if (g.size() == 0) return 0;
  return edge_colorable(g, g.max_degree()) ? g.max_degree() : g.max_degree() + 1;
}

ClassLabel classify(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("edgeless graph has no class");
  return chromatic_index(g) == g.max_degree() ? ClassLabel::Class1 : ClassLabel::Class2;
}

bool is_critical_edge(const Graph& g, Edge e) {
  EdgeId id = require_edge(g, e);
  return chromatic_index(g.without_edge(id)) < chromatic_index(g);
}

std::optional<bool> is_delta_critical(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) return std::nullopt;
  const int delta = g.max_degree();
  if (edge_colorable(g, delta)) return false;
  // χ'(G) = Δ + 1, so e is critical iff G - e is Δ-colorable.
  for (std::size_t id = 0; id < g.size(); ++id)
    if (!edge_colorable(g.without_edge(static_cast<EdgeId>(id)), delta)) return false;
  return true;
}

std::size_t for_each_coloring(const Graph& g, std::optional<EdgeId> skip, int k,
                              const std::function<bool(std::span<const Color>)>& visit) {
  Backtracker bt(g, skip, k);
  std::size_t count = 0;
  bt.run([&](std::span<const Color> cs) {
    ++count;
    return visit(cs);
  });
  return count;
}

ColoringSample enumerate_colorings(const Graph& g, Edge e, int k, std::size_t budget, std::uint64_t seed) {
  EdgeId skip = require_edge(g, e);
  auto host = std::make_shared<const Graph>(g);
  ColoringSample out;

  std::vector<std::vector<Color>> first;
  const std::size_t probe = budget + 1;
  for_each_coloring(g, skip, k, [&](std::span<const Color> cs) {
    first.emplace_back(cs.begin(), cs.end());
    return first.size() < probe;
  });
  out.colorable = !first.empty();
  if (budget == 0) return out;
  if (first.size() <= budget) {
    out.exhaustive = true;
    for (auto& cs : first) out.colorings.emplace_back(host, k, cs);
    return out;
  }

  // More than `budget` exist: draw distinct ones by randomized restarts.
  std::mt19937_64 rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(skip) + 1)));
  std::set<std::vector<Color>> seen;
  const std::size_t max_attempts = 50 * budget + 100;
  for (std::size_t attempt = 0; attempt < max_attempts && out.colorings.size() < budget; ++attempt) {
    Backtracker bt(g, skip, k);
    bt.rng = &rng;
    std::vector<Color> got;
    bt.run([&](std::span<const Color> cs) {
      got.assign(cs.begin(), cs.end());
      return false;
    });
    if (seen.insert(got).second) out.colorings.emplace_back(host, k, got);
  }
  return out;
}

ColoringSample sample_colorings(const Graph& g, Edge e, int k, const SamplingPolicy& policy) {
  if (policy.sample_size == 0) {
    ColoringSample out = enumerate_colorings(g, e, k, 0, policy.seed);
    return out;
  }
  ColoringSample all = enumerate_colorings(g, e, k, policy.exhaustive_limit, policy.seed);
  if (all.exhaustive) return all;
  return enumerate_colorings(g, e, k, policy.sample_size, policy.seed);
}

}  // namespace ecol
