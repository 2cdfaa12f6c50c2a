#include "ecol/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace ecol {

namespace {

std::atomic<bool> g_debug_checks{false};

void check_palette(int k) {
  if (k < 0 || k > kMaxColors)
    throw std::invalid_argument("palette size " + std::to_string(k) + " outside 0.." + std::to_string(kMaxColors));
}

}  // namespace

void set_debug_checks(bool on) { g_debug_checks.store(on, std::memory_order_relaxed); }
bool debug_checks() { return g_debug_checks.load(std::memory_order_relaxed); }

ColorSet palette(int k) {
  ColorSet s;
  for (int c = 1; c <= k; ++c) s.set(static_cast<std::size_t>(c));
  return s;
}

std::vector<Color> colors_of(const ColorSet& s) {
  std::vector<Color> out;
  for (std::size_t c = s._Find_first(); c < s.size(); c = s._Find_next(c)) out.push_back(static_cast<Color>(c));
  return out;
}

std::string format_colors(const ColorSet& s) {
  std::string out = "{";
  bool first = true;
  for (Color c : colors_of(s)) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

// --- ColorTable -------------------------------------------------------------

namespace detail {

ColorTable::ColorTable(std::shared_ptr<const Graph> host, int k) : host_(std::move(host)), k_(k) {
  check_palette(k);
  colors_.assign(host_->size(), kNoColor);
  present_.assign(static_cast<std::size_t>(host_->order()), ColorSet{});
  at_.assign(static_cast<std::size_t>(host_->order()) * static_cast<std::size_t>(k + 1), -1);
}

void ColorTable::assign(EdgeId e, Color c) {
  if (c < 1 || c > k_) throw std::invalid_argument("color " + std::to_string(c) + " outside [1," + std::to_string(k_) + "]");
  const Edge& ed = host_->edge(e);
  if (color(e) != kNoColor) throw std::logic_error("edge " + to_string(ed) + " already colored");
  if (!is_free(ed.u, c) || !is_free(ed.v, c))
    throw std::invalid_argument("color " + std::to_string(c) + " already present at an end of " + to_string(ed));
  colors_[static_cast<std::size_t>(e)] = c;
  present_[static_cast<std::size_t>(ed.u)].set(static_cast<std::size_t>(c));
  present_[static_cast<std::size_t>(ed.v)].set(static_cast<std::size_t>(c));
  slot(ed.u, c) = e;
  slot(ed.v, c) = e;
}

void ColorTable::clear(EdgeId e) {
  Color c = color(e);
  if (c == kNoColor) return;
  const Edge& ed = host_->edge(e);
  colors_[static_cast<std::size_t>(e)] = kNoColor;
  present_[static_cast<std::size_t>(ed.u)].reset(static_cast<std::size_t>(c));
  present_[static_cast<std::size_t>(ed.v)].reset(static_cast<std::size_t>(c));
  slot(ed.u, c) = -1;
  slot(ed.v, c) = -1;
}

void ColorTable::recolor(std::span<const std::pair<EdgeId, Color>> changes) {
  for (const auto& [e, c] : changes) clear(e);
  for (const auto& [e, c] : changes)
    if (c != kNoColor) assign(e, c);
  if (debug_checks()) verify();
}

void ColorTable::verify() const {
  ColorTable fresh(host_, k_);
  for (std::size_t e = 0; e < colors_.size(); ++e) {
    if (colors_[e] == kNoColor) continue;
    try {
      fresh.assign(static_cast<EdgeId>(e), colors_[e]);
    } catch (const std::invalid_argument& ex) {
      throw std::logic_error(std::string("improper coloring: ") + ex.what());
    }
  }
  if (fresh.present_ != present_ || fresh.at_ != at_) throw std::logic_error("color tables out of sync");
  for (Vertex v = 0; v < host_->order(); ++v) {
    auto pc = present(v).count();
    auto mc = missing(v).count();
    if (pc + mc != static_cast<std::size_t>(k_)) throw std::logic_error("present/missing sizes do not sum to k");
  }
}

}  // namespace detail

// --- PartialColoring --------------------------------------------------------

PartialColoring::PartialColoring(std::shared_ptr<const Graph> host, int k, std::span<const Color> colors)
    : table_(std::move(host), k) {
  const Graph& g = table_.host();
  if (colors.size() != g.size())
    throw std::invalid_argument("expected " + std::to_string(g.size()) + " edge colors, got " +
                                std::to_string(colors.size()));
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] == kNoColor) {
      if (uncolored_) throw std::invalid_argument("more than one uncolored edge");
      uncolored_ = static_cast<EdgeId>(e);
      continue;
    }
    table_.assign(static_cast<EdgeId>(e), colors[e]);
  }
  if (debug_checks()) table_.verify();
}

PartialColoring PartialColoring::from_edges(const Graph& host, int k,
                                            std::initializer_list<std::pair<Edge, Color>> assignment) {
  std::vector<Color> colors(host.size(), kNoColor);
  for (const auto& [e, c] : assignment) {
    auto id = host.find_edge(e.u, e.v);
    if (!id) throw std::invalid_argument("edge " + to_string(make_edge(e.u, e.v)) + " not in graph");
    if (c == kNoColor) throw std::invalid_argument("explicit color 0 for edge " + to_string(e));
    colors[static_cast<std::size_t>(*id)] = c;
  }
  return PartialColoring(host, k, colors);
}

PartialColoring PartialColoring::from_table(detail::ColorTable t) {
  std::optional<EdgeId> unc;
  for (std::size_t e = 0; e < t.colors().size(); ++e) {
    if (t.colors()[e] != kNoColor) continue;
    if (unc) throw std::invalid_argument("more than one uncolored edge");
    unc = static_cast<EdgeId>(e);
  }
  if (debug_checks()) t.verify();
  return PartialColoring(std::move(t), unc);
}

std::optional<EdgeId> PartialColoring::edge_with(Vertex v, Color c) const {
  if (c < 1 || c > k()) return std::nullopt;
  EdgeId e = table_.edge_at(v, c);
  if (e < 0) return std::nullopt;
  return e;
}

void PartialColoring::check_invariants() const {
  table_.verify();
  std::size_t unc = 0;
  for (Color c : colors()) unc += c == kNoColor;
  if (unc > 1 || (unc == 1) != uncolored_.has_value()) throw std::logic_error("uncolored edge bookkeeping broken");
  if (uncolored_ && color(*uncolored_) != kNoColor) throw std::logic_error("distinguished edge carries a color");
}

// --- RelaxedColoring --------------------------------------------------------

RelaxedColoring::RelaxedColoring(std::shared_ptr<const Graph> host, int k, std::vector<Color> colors)
    : host_(std::move(host)), k_(k), colors_(std::move(colors)) {
  check_palette(k);
  if (colors_.size() != host_->size()) throw std::invalid_argument("edge color count mismatch");
  for (Vertex v = 0; v < host_->order(); ++v) {
    auto inc = host_->incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        Color a = color(inc[i]);
        if (a != kNoColor && a == color(inc[j]))
          conflicts_.emplace_back(std::min(inc[i], inc[j]), std::max(inc[i], inc[j]));
      }
    }
  }
  std::sort(conflicts_.begin(), conflicts_.end());
}

std::optional<PartialColoring> RelaxedColoring::to_proper() const {
  if (!proper()) return std::nullopt;
  return PartialColoring(host_, k_, colors_);
}

// --- sets -------------------------------------------------------------------

ColorSet missing_set(const PartialColoring& c, Vertex u) {
  if (!c.host().contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
  return c.missing(u);
}

bool is_elementary(const PartialColoring& c, std::span<const Vertex> xs) {
  ColorSet seen;
  for (Vertex v : xs) {
    ColorSet m = missing_set(c, v);
    if ((seen & m).any()) return false;
    seen |= m;
  }
  return true;
}

// --- chains -----------------------------------------------------------------

bool Chain::contains(Vertex v) const { return position(v).has_value(); }

std::optional<std::size_t> Chain::position(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::pair<Vertex, Vertex> Chain::ends() const {
  if (!is_path()) throw std::logic_error("a cycle has no end vertices");
  return {vertices.front(), vertices.back()};
}

bool Chain::disjoint_from(const Chain& other) const {
  return std::none_of(vertices.begin(), vertices.end(), [&](Vertex v) { return other.contains(v); });
}

namespace {

void check_pair(const PartialColoring& c, Color alpha, Color beta) {
  if (alpha == beta) throw std::invalid_argument("chain colors must differ");
  if (alpha < 1 || alpha > c.k() || beta < 1 || beta > c.k())
    throw std::invalid_argument("chain color outside [1," + std::to_string(c.k()) + "]");
}

// Walks from `start` leaving through the edge colored `first`, alternating.
// Stops at a vertex missing the next color or on returning to `start`.
void walk(const PartialColoring& c, Vertex start, Color first, Color second, std::vector<Vertex>& vs,
          std::vector<EdgeId>& es, bool& closed) {
  Vertex v = start;
  Color want = first;
  closed = false;
  while (auto e = c.edge_with(v, want)) {
    if (!es.empty() && *e == es.back()) break;
    Vertex w = c.host().edge(*e).other(v);
    es.push_back(*e);
    if (w == start) {
      closed = true;
      return;
    }
    vs.push_back(w);
    v = w;
    want = want == first ? second : first;
  }
}

}  // namespace

Chain chain_at(const PartialColoring& c, Vertex u, Color alpha, Color beta) {
  check_pair(c, alpha, beta);
  if (!c.host().contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " out of range");
  Chain ch;
  ch.alpha = alpha;
  ch.beta = beta;

  std::vector<Vertex> fwd{u};
  std::vector<EdgeId> fwd_e;
  bool closed = false;
  walk(c, u, alpha, beta, fwd, fwd_e, closed);
  if (closed) {
    ch.kind = ChainKind::Cycle;
    ch.vertices = std::move(fwd);
    ch.edges = std::move(fwd_e);
  } else {
    std::vector<Vertex> back{u};
    std::vector<EdgeId> back_e;
    walk(c, u, beta, alpha, back, back_e, closed);
    // back runs u -> other end; splice reversed(back) + fwd.
    ch.vertices.assign(back.rbegin(), back.rend());
    ch.vertices.insert(ch.vertices.end(), fwd.begin() + 1, fwd.end());
    ch.edges.assign(back_e.rbegin(), back_e.rend());
    ch.edges.insert(ch.edges.end(), fwd_e.begin(), fwd_e.end());
  }

  // Canonical traversal.
  if (ch.is_path()) {
    if (ch.vertices.back() < ch.vertices.front()) {
      std::reverse(ch.vertices.begin(), ch.vertices.end());
      std::reverse(ch.edges.begin(), ch.edges.end());
    }
  } else {
    auto L = ch.vertices.size();
    auto m = static_cast<std::size_t>(std::min_element(ch.vertices.begin(), ch.vertices.end()) - ch.vertices.begin());
    std::rotate(ch.vertices.begin(), ch.vertices.begin() + static_cast<std::ptrdiff_t>(m), ch.vertices.end());
    std::rotate(ch.edges.begin(), ch.edges.begin() + static_cast<std::ptrdiff_t>(m), ch.edges.end());
    // Now edges[i] joins vertices[i], vertices[i+1 mod L]. Reverse direction
    // if the predecessor of vertices[0] is the lower neighbor.
    if (ch.vertices[L - 1] < ch.vertices[1]) {
      std::reverse(ch.vertices.begin() + 1, ch.vertices.end());
      std::reverse(ch.edges.begin(), ch.edges.end());
    }
  }
  ch.step_colors.reserve(ch.edges.size());
  for (EdgeId e : ch.edges) ch.step_colors.push_back(c.color(e));
  return ch;
}

PartialColoring kempe_change(const PartialColoring& c, const Chain& ch) {
  check_pair(c, ch.alpha, ch.beta);
  if (ch.vertices.empty() || chain_at(c, ch.vertices.front(), ch.alpha, ch.beta) != ch)
    throw std::invalid_argument("not a maximal (" + std::to_string(ch.alpha) + "," + std::to_string(ch.beta) +
                                ")-chain of this coloring");
  detail::ColorTable t = c.table();
  std::vector<std::pair<EdgeId, Color>> changes;
  changes.reserve(ch.edges.size());
  for (EdgeId e : ch.edges) changes.emplace_back(e, c.color(e) == ch.alpha ? ch.beta : ch.alpha);
  t.recolor(changes);
  return PartialColoring::from_table(std::move(t));
}

RelaxedColoring kempe_change_subchain(const PartialColoring& c, const Chain& ch, Vertex a, Vertex b) {
  if (!ch.is_path()) throw std::invalid_argument("subchain swap needs a path chain");
  if (ch.vertices.empty() || chain_at(c, ch.vertices.front(), ch.alpha, ch.beta) != ch)
    throw std::invalid_argument("not a maximal chain of this coloring");
  auto pa = ch.position(a);
  auto pb = ch.position(b);
  if (!pa || !pb) throw std::invalid_argument("subchain end not on chain");
  auto lo = std::min(*pa, *pb);
  auto hi = std::max(*pa, *pb);
  std::vector<Color> colors(c.colors().begin(), c.colors().end());
  for (auto i = lo; i < hi; ++i) {
    auto& col = colors[static_cast<std::size_t>(ch.edges[i])];
    col = col == ch.alpha ? ch.beta : ch.alpha;
  }
  return RelaxedColoring(c.host_ptr(), c.k(), std::move(colors));
}

RelaxedColoring recolor_edge(const PartialColoring& c, EdgeId e, Color beta) {
  if (e < 0 || static_cast<std::size_t>(e) >= c.host().size()) throw std::invalid_argument("edge id out of range");
  if (c.uncolored() == e) throw std::invalid_argument("cannot recolor the uncolored edge");
  if (beta < 1 || beta > c.k()) throw std::invalid_argument("color outside palette");
  std::vector<Color> colors(c.colors().begin(), c.colors().end());
  colors[static_cast<std::size_t>(e)] = beta;
  return RelaxedColoring(c.host_ptr(), c.k(), std::move(colors));
}

bool meets_before(const Chain& ch, Vertex u, Vertex x, Vertex y) {
  if (!ch.is_path()) throw std::invalid_argument("meets_before needs a path chain");
  auto pu = ch.position(u);
  auto px = ch.position(x);
  auto py = ch.position(y);
  if (!pu || !px || !py) throw std::invalid_argument("vertex not on chain");
  auto dist = [&](std::size_t p) { return p > *pu ? p - *pu : *pu - p; };
  bool same_side = (*px >= *pu) == (*py >= *pu) || *px == *pu;
  return same_side && dist(*px) < dist(*py);
}

// --- text form --------------------------------------------------------------

std::string dump_coloring(const Graph& g, std::span<const Color> colors) {
  std::ostringstream os;
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    if (colors[id] == kNoColor)
      os << "uncolored " << e.u << ' ' << e.v << '\n';
    else
      os << e.u << ' ' << e.v << ' ' << colors[id] << '\n';
  }
  return os.str();
}

std::string dump_coloring(const PartialColoring& c) { return dump_coloring(c.host(), c.colors()); }

PartialColoring parse_coloring(std::shared_ptr<const Graph> host, int k, std::string_view text) {
  std::vector<Color> colors(host->size(), kNoColor);
  std::vector<char> seen(host->size(), 0);
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    long u = 0, v = 0, col = kNoColor;
    bool unc = first == "uncolored";
    try {
      if (unc) {
        if (!(ls >> u >> v)) throw std::invalid_argument("");
      } else {
        u = std::stol(first);
        if (!(ls >> v >> col)) throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": expected 'u v c' or 'uncolored u v'");
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": trailing text");
    auto id = host->find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!id) throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": no such edge");
    auto i = static_cast<std::size_t>(*id);
    if (seen[i]) throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": edge listed twice");
    seen[i] = 1;
    if (!unc && col == kNoColor) throw std::invalid_argument("coloring line " + std::to_string(lineno) + ": color 0");
    colors[i] = static_cast<Color>(col);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw std::invalid_argument("coloring text omits edge " + to_string(host->edge(static_cast<EdgeId>(i))));
  return PartialColoring(std::move(host), k, colors);
}

std::string format_chain(const Chain& ch) {
  std::ostringstream os;
  os << (ch.is_path() ? "path" : "cycle") << '(' << ch.alpha << ',' << ch.beta << "):";
  for (std::size_t i = 0; i < ch.vertices.size(); ++i) {
    os << ' ' << ch.vertices[i];
    if (i < ch.step_colors.size()) os << " -" << ch.step_colors[i] << "-";
  }
  if (!ch.is_path() && !ch.vertices.empty()) os << ' ' << ch.vertices.front();
  return os.str();
}

}  // namespace ecol
