#include <algorithm>
#include <memory>
#include <stdexcept>

#include "ecol/solver.hpp"

namespace ecol {

namespace {

Color lowest_free(const detail::ColorTable& t, Vertex v) {
  ColorSet m = t.missing(v);
  auto c = m._Find_first();
  if (c >= m.size()) throw std::logic_error("no free color at vertex " + std::to_string(v));
  return static_cast<Color>(c);
}

// Fan at x for the uncolored edge x-y: y_1 = y, then repeatedly the lowest
// unused neighbor w whose edge color is free at the last fan vertex.
std::vector<Vertex> build_fan(const detail::ColorTable& t, Vertex x, Vertex y) {
  const Graph& g = t.host();
  std::vector<Vertex> fan{y};
  for (;;) {
    Vertex last = fan.back();
    bool grown = false;
    auto nb = g.neighbors(x);
    auto inc = g.incident(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Color c = t.color(inc[i]);
      if (c == kNoColor || !t.is_free(last, c)) continue;
      if (std::find(fan.begin(), fan.end(), nb[i]) != fan.end()) continue;
      fan.push_back(nb[i]);
      grown = true;
      break;
    }
    if (!grown) return fan;
  }
}

// Swaps c and d on the (c,d)-path leaving x; x must miss c.
void invert_path(detail::ColorTable& t, Vertex x, Color c, Color d) {
  std::vector<std::pair<EdgeId, Color>> changes;
  Vertex v = x;
  Color want = d;
  while (true) {
    EdgeId e = t.edge_at(v, want);
    if (e < 0) break;
    changes.emplace_back(e, want == c ? d : c);
    v = t.host().edge(e).other(v);
    want = want == c ? d : c;
  }
  t.recolor(changes);
}

}  // namespace

ColoringCertificate vizing_color(const Graph& g) {
  const int k = g.max_degree() + 1;
  if (k > kMaxColors) throw std::invalid_argument("max degree too large for the palette");
  auto host = std::make_shared<const Graph>(g);
  detail::ColorTable t(host, k);

  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    const Vertex x = e.u;
    std::vector<Vertex> fan = build_fan(t, x, e.v);
    const Color c = lowest_free(t, x);
    const Color d = lowest_free(t, fan.back());
    if (c != d) invert_path(t, x, c, d);

    // First w along the fan with d free whose prefix is still a fan.
    std::size_t w = 0;
    for (;; ++w) {
      if (w == fan.size()) throw std::logic_error("fan rotation found no pivot");
      if (w > 0) {
        Color cw = t.color(*g.find_edge(x, fan[w]));
        if (cw == kNoColor || !t.is_free(fan[w - 1], cw)) throw std::logic_error("fan prefix broken");
      }
      if (t.is_free(fan[w], d)) break;
    }

    // Rotate: x-fan[i] takes the color of x-fan[i+1]; x-fan[w] gets d.
    std::vector<std::pair<EdgeId, Color>> changes;
    for (std::size_t i = 0; i < w; ++i)
      changes.emplace_back(*g.find_edge(x, fan[i]), t.color(*g.find_edge(x, fan[i + 1])));
    changes.emplace_back(*g.find_edge(x, fan[w]), d);
    t.recolor(changes);
  }

  int used = 0;
  for (Color col : t.colors()) used = std::max(used, col);
  return ColoringCertificate{PartialColoring::from_table(std::move(t)), used};
}

}  // namespace ecol
