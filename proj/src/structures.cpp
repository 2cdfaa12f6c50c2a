#include "ecol/structures.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ecol {

namespace {

std::string color_text(Color c) { return c == kNoColor ? "-" : std::to_string(c); }

std::optional<Violation> fail(const char* cond, std::size_t index, std::string detail) {
  return Violation{cond, index, std::move(detail)};
}

// Shared by the two validators; `path` selects Kierstead (K) rules.
std::optional<Violation> validate(const PartialColoring& c, const Sequence& seq, bool path) {
  const char* c1 = path ? "K1" : "F1";
  const char* c2 = path ? "K2" : "F2";
  const Graph& g = c.host();
  if (seq.edges.empty() || seq.vertices.size() != seq.edges.size() + 1)
    return fail(c1, 0, "sequence needs p >= 1 edges and p + 1 vertices");
  for (Vertex v : seq.vertices)
    if (!g.contains(v)) return fail(c1, 0, "vertex " + std::to_string(v) + " out of range");
  auto unc = c.uncolored();
  if (!unc) return fail(c1, 1, "coloring has no uncolored edge");

  std::vector<EdgeId> ids;
  for (std::size_t i = 1; i <= seq.edges.size(); ++i) {
    const Edge& raw = seq.edges[i - 1];
    Edge e = make_edge(raw.u, raw.v);
    Vertex from = path ? seq.vertices[i - 1] : seq.vertices[0];
    if (e != make_edge(from, seq.vertices[i]))
      return fail(c1, i, "e" + std::to_string(i) + " = " + to_string(e) + " does not join " + std::to_string(from) +
                             " and " + std::to_string(seq.vertices[i]));
    auto id = g.find_edge(e.u, e.v);
    if (!id) return fail(c1, i, "e" + std::to_string(i) + " = " + to_string(e) + " is not an edge");
    if (i == 1 && *id != *unc) return fail(c1, 1, "e1 is not the uncolored edge");
    if (std::find(ids.begin(), ids.end(), *id) != ids.end())
      return fail(c1, i, "e" + std::to_string(i) + " repeats an earlier edge");
    if (path) {
      auto first = seq.vertices.begin();
      auto here = first + static_cast<std::ptrdiff_t>(i);
      if (std::find(first, here, *here) != here)
        return fail(c1, i, "y" + std::to_string(i) + " repeats an earlier vertex");
    }
    ids.push_back(*id);
  }

  ColorSet seen;
  for (std::size_t i = 1; i <= seq.edges.size(); ++i) {
    if (i >= 2) {
      Color col = c.color(ids[i - 1]);
      if (!seen.test(static_cast<std::size_t>(col)))
        return fail(c2, i, "color " + std::to_string(col) + " of e" + std::to_string(i) +
                               " is missing at no earlier vertex");
    }
    // Vertices usable as witnesses for e_{i+1}: fans use y_1..y_i, paths y_0..y_i.
    if (path && i == 1) seen |= c.missing(seq.vertices[0]);
    seen |= c.missing(seq.vertices[i]);
  }
  return std::nullopt;
}

std::vector<int> witnesses(const PartialColoring& c, const Sequence& seq, bool path) {
  std::vector<int> w{-1};
  const Graph& g = c.host();
  for (std::size_t i = 2; i <= seq.edges.size(); ++i) {
    Color col = c.color(*g.find_edge(seq.edges[i - 1].u, seq.edges[i - 1].v));
    int found = -1;
    for (std::size_t j = path ? 0 : 1; j < i; ++j) {
      if (c.missing(seq.vertices[j]).test(static_cast<std::size_t>(col))) {
        found = static_cast<int>(j);
        break;
      }
    }
    w.push_back(found);
  }
  return w;
}

}  // namespace

std::optional<Violation> validate_multifan(const PartialColoring& c, const Sequence& seq) {
  return validate(c, seq, false);
}

std::optional<Violation> validate_kierstead_path(const PartialColoring& c, const Sequence& seq) {
  return validate(c, seq, true);
}

MultiFan maximal_multifan(const PartialColoring& c, Vertex x) {
  auto unc = c.uncolored();
  if (!unc || !c.host().edge(*unc).has(x))
    throw std::invalid_argument("uncolored edge is not incident to vertex " + std::to_string(x));
  const Graph& g = c.host();
  const Edge& e = g.edge(*unc);
  MultiFan f;
  f.seq.vertices = {x, e.other(x)};
  f.seq.edges = {e};
  ColorSet reach = c.missing(e.other(x));
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  used[static_cast<std::size_t>(x)] = 1;
  used[static_cast<std::size_t>(e.other(x))] = 1;
  bool grown = true;
  while (grown) {
    grown = false;
    auto nb = g.neighbors(x);
    auto inc = g.incident(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex y = nb[i];
      if (used[static_cast<std::size_t>(y)]) continue;
      Color col = c.color(inc[i]);
      if (col == kNoColor || !reach.test(static_cast<std::size_t>(col))) continue;
      used[static_cast<std::size_t>(y)] = 1;
      f.seq.vertices.push_back(y);
      f.seq.edges.push_back(g.edge(inc[i]));
      reach |= c.missing(y);
      grown = true;
      break;
    }
  }
  f.witness = witnesses(c, f.seq, false);
  return f;
}

void for_each_kierstead_path(const PartialColoring& c, std::size_t min_edges, std::size_t max_edges,
                             const std::function<void(const KiersteadPath&)>& visit) {
  auto unc = c.uncolored();
  if (!unc || max_edges == 0) return;
  const Graph& g = c.host();
  const Edge& e = g.edge(*unc);
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  KiersteadPath kp;

  std::function<void(ColorSet)> extend = [&](ColorSet reach) {
    std::size_t len = kp.seq.edges.size();
    if (len >= min_edges) {
      kp.witness = witnesses(c, kp.seq, true);
      visit(kp);
    }
    if (len == max_edges) return;
    Vertex last = kp.seq.vertices.back();
    auto nb = g.neighbors(last);
    auto inc = g.incident(last);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (on[static_cast<std::size_t>(w)]) continue;
      Color col = c.color(inc[i]);
      if (col == kNoColor || !reach.test(static_cast<std::size_t>(col))) continue;
      on[static_cast<std::size_t>(w)] = 1;
      kp.seq.vertices.push_back(w);
      kp.seq.edges.push_back(g.edge(inc[i]));
      extend(reach | c.missing(w));
      kp.seq.vertices.pop_back();
      kp.seq.edges.pop_back();
      on[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (auto [y0, y1] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    kp.seq.vertices = {y0, y1};
    kp.seq.edges = {e};
    on[static_cast<std::size_t>(y0)] = on[static_cast<std::size_t>(y1)] = 1;
    extend(c.missing(y0) | c.missing(y1));
    on[static_cast<std::size_t>(y0)] = on[static_cast<std::size_t>(y1)] = 0;
  }
}

std::vector<KiersteadPath> find_kierstead_paths(const PartialColoring& c, std::size_t max_edges) {
  std::vector<KiersteadPath> out;
  for_each_kierstead_path(c, 1, max_edges, [&](const KiersteadPath& k) { out.push_back(k); });
  return out;
}

// --- forks and branches -----------------------------------------------------

namespace {

Color color_of(const PartialColoring& c, Vertex p, Vertex q) {
  auto id = c.host().find_edge(p, q);
  return id ? c.color(*id) : kNoColor;
}

bool has(const ColorSet& s, Color col) { return col != kNoColor && s.test(static_cast<std::size_t>(col)); }

template <typename Visit>
void for_each_orientation(const PartialColoring& c, Visit&& visit) {
  auto unc = c.uncolored();
  if (!unc) return;
  const Edge& e = c.host().edge(*unc);
  visit(e.u, e.v);
  visit(e.v, e.u);
}

}  // namespace

bool is_fork(const PartialColoring& c, const ForkConfig& f) {
  const Graph& g = c.host();
  std::vector<Vertex> vs{f.a, f.b, f.u, f.s1, f.s2, f.t1, f.t2};
  for (Vertex v : vs)
    if (!g.contains(v)) return false;
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto unc = c.uncolored();
  if (!unc || g.edge(*unc) != make_edge(f.a, f.b)) return false;
  for (auto [p, q] : {std::pair{f.b, f.u}, {f.u, f.s1}, {f.u, f.s2}, {f.s1, f.t1}, {f.s2, f.t2}})
    if (!g.adjacent(p, q)) return false;
  const ColorSet m_ab = c.missing(f.a) | c.missing(f.b);
  return has(c.missing(f.a), color_of(c, f.b, f.u)) && has(m_ab, color_of(c, f.u, f.s1)) &&
         has(m_ab, color_of(c, f.u, f.s2)) && has(m_ab & c.missing(f.t2), color_of(c, f.s1, f.t1)) &&
         has(m_ab & c.missing(f.t1), color_of(c, f.s2, f.t2));
}

std::vector<ForkConfig> find_forks(const PartialColoring& c) {
  std::vector<ForkConfig> out;
  const Graph& g = c.host();
  if (g.order() < 7) return out;
  for_each_orientation(c, [&](Vertex a, Vertex b) {
    const ColorSet ma = c.missing(a);
    const ColorSet m_ab = ma | c.missing(b);
    for (Vertex u : g.neighbors(b)) {
      if (u == a) continue;
      Color bu = color_of(c, b, u);
      if (!has(ma, bu)) continue;
      for (Vertex s1 : g.neighbors(u)) {
        if (s1 == a || s1 == b) continue;
        Color us1 = color_of(c, u, s1);
        if (!has(m_ab, us1)) continue;
        for (Vertex s2 : g.neighbors(u)) {
          if (s2 <= s1 || s2 == a || s2 == b) continue;
          Color us2 = color_of(c, u, s2);
          if (!has(m_ab, us2)) continue;
          for (Vertex t1 : g.neighbors(s1)) {
            if (t1 == a || t1 == b || t1 == u || t1 == s2) continue;
            Color s1t1 = color_of(c, s1, t1);
            if (!has(m_ab, s1t1)) continue;
            for (Vertex t2 : g.neighbors(s2)) {
              if (t2 == a || t2 == b || t2 == u || t2 == s1 || t2 == t1) continue;
              Color s2t2 = color_of(c, s2, t2);
              if (!has(m_ab & c.missing(t1), s2t2) || !has(c.missing(t2), s1t1)) continue;
              out.push_back({a, b, u, s1, s2, t1, t2, bu, us1, us2, s1t1, s2t2});
            }
          }
        }
      }
    }
  });
  return out;
}

std::pair<Sequence, Sequence> branch_paths(const BranchConfig& br) {
  auto path = [&](Vertex s, Vertex t) {
    Sequence q;
    q.vertices = {br.a, br.b, br.u, s};
    if (!br.short_form) q.vertices.push_back(t);
    for (std::size_t i = 1; i < q.vertices.size(); ++i) q.edges.push_back(make_edge(q.vertices[i - 1], q.vertices[i]));
    return q;
  };
  return {path(br.s1, br.t1), path(br.s2, br.t2)};
}

bool is_branch(const PartialColoring& c, const BranchConfig& br) {
  const Graph& g = c.host();
  std::vector<Vertex> vs{br.a, br.b, br.u, br.s1, br.s2};
  if (!br.short_form) {
    vs.push_back(br.t1);
    vs.push_back(br.t2);
  }
  for (Vertex v : vs)
    if (!g.contains(v)) return false;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  auto [k1, k2] = branch_paths(br);
  if (validate_kierstead_path(c, k1) || validate_kierstead_path(c, k2)) return false;
  if (br.short_form) {
    const ColorSet m_ab = c.missing(br.a) | c.missing(br.b);
    return (c.missing(br.s1) & m_ab).any() && (c.missing(br.s2) & m_ab).any();
  }
  return color_of(c, br.s1, br.t1) == color_of(c, br.s2, br.t2);
}

std::vector<BranchConfig> find_branches(const PartialColoring& c, bool short_form) {
  std::vector<BranchConfig> out;
  const Graph& g = c.host();
  if (g.order() < (short_form ? 5 : 7)) return out;
  for_each_orientation(c, [&](Vertex a, Vertex b) {
    const ColorSet m_ab = c.missing(a) | c.missing(b);
    for (Vertex u : g.neighbors(b)) {
      if (u == a) continue;
      Color bu = color_of(c, b, u);
      if (!has(m_ab, bu)) continue;
      for (Vertex s1 : g.neighbors(u)) {
        if (s1 == a || s1 == b) continue;
        for (Vertex s2 : g.neighbors(u)) {
          if (s2 <= s1 || s2 == a || s2 == b) continue;
          BranchConfig br;
          br.short_form = short_form;
          br.a = a;
          br.b = b;
          br.u = u;
          br.s1 = s1;
          br.s2 = s2;
          br.bu = bu;
          br.us1 = color_of(c, u, s1);
          br.us2 = color_of(c, u, s2);
          if (!has(m_ab, br.us1) || !has(m_ab, br.us2)) continue;
          if (short_form) {
            if (is_branch(c, br)) out.push_back(br);
            continue;
          }
          for (Vertex t1 : g.neighbors(s1)) {
            if (t1 == a || t1 == b || t1 == u || t1 == s2) continue;
            for (Vertex t2 : g.neighbors(s2)) {
              if (t2 == a || t2 == b || t2 == u || t2 == s1 || t2 == t1) continue;
              br.t1 = t1;
              br.t2 = t2;
              br.s1t1 = color_of(c, s1, t1);
              br.s2t2 = color_of(c, s2, t2);
              if (br.s1t1 != br.s2t2) continue;
              if (is_branch(c, br)) out.push_back(br);
            }
          }
        }
      }
    }
  });
  return out;
}

// --- text form --------------------------------------------------------------

std::string format_sequence(const PartialColoring& c, const Sequence& seq, std::string_view tag) {
  std::ostringstream os;
  os << tag << " v=";
  for (std::size_t i = 0; i < seq.vertices.size(); ++i) os << (i ? "," : "") << seq.vertices[i];
  os << " c=";
  for (std::size_t i = 0; i < seq.edges.size(); ++i) {
    auto id = c.host().find_edge(seq.edges[i].u, seq.edges[i].v);
    os << (i ? "," : "") << color_text(id ? c.color(*id) : kNoColor);
  }
  return os.str();
}

namespace {

std::string witness_text(const std::vector<int>& w) {
  std::string s = " w=";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + (w[i] < 0 ? std::string("-") : std::to_string(w[i]));
  return s;
}

}  // namespace

std::string format_multifan(const PartialColoring& c, const MultiFan& f) {
  return format_sequence(c, f.seq, "multifan") + witness_text(f.witness);
}

std::string format_kierstead(const PartialColoring& c, const KiersteadPath& k) {
  return format_sequence(c, k.seq, "kierstead") + witness_text(k.witness);
}

std::string format_fork(const ForkConfig& f) {
  std::ostringstream os;
  os << "fork a=" << f.a << " b=" << f.b << " u=" << f.u << " s1=" << f.s1 << " s2=" << f.s2 << " t1=" << f.t1
     << " t2=" << f.t2 << " bu=" << f.bu << " us1=" << f.us1 << " us2=" << f.us2 << " s1t1=" << f.s1t1
     << " s2t2=" << f.s2t2;
  return os.str();
}

std::string format_branch(const BranchConfig& b) {
  std::ostringstream os;
  if (b.short_form) {
    os << "short-branch a=" << b.a << " b=" << b.b << " u=" << b.u << " x=" << b.s1 << " y=" << b.s2 << " bu=" << b.bu
       << " ux=" << b.us1 << " uy=" << b.us2;
  } else {
    os << "branch a=" << b.a << " b=" << b.b << " u=" << b.u << " s1=" << b.s1 << " s2=" << b.s2 << " t1=" << b.t1
       << " t2=" << b.t2 << " bu=" << b.bu << " us1=" << b.us1 << " us2=" << b.us2 << " s1t1=" << b.s1t1
       << " s2t2=" << b.s2t2;
  }
  return os.str();
}

namespace {

std::map<std::string, std::string> fields(std::string_view text, std::string& tag) {
  std::istringstream is{std::string(text)};
  is >> tag;
  std::map<std::string, std::string> out;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed field '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

Vertex vertex_field(const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) throw std::invalid_argument("missing field '" + key + "'");
  return std::stoi(it->second);
}

}  // namespace

Sequence parse_sequence(std::string_view text) {
  std::string tag;
  auto f = fields(text, tag);
  if (tag != "multifan" && tag != "kierstead") throw std::invalid_argument("unknown sequence tag '" + tag + "'");
  auto it = f.find("v");
  if (it == f.end()) throw std::invalid_argument("missing vertex list");
  Sequence seq;
  std::istringstream vs(it->second);
  std::string item;
  while (std::getline(vs, item, ',')) seq.vertices.push_back(std::stoi(item));
  for (std::size_t i = 1; i < seq.vertices.size(); ++i) {
    Vertex from = tag == "kierstead" ? seq.vertices[i - 1] : seq.vertices[0];
    seq.edges.push_back(make_edge(from, seq.vertices[i]));
  }
  return seq;
}

ForkConfig parse_fork(const PartialColoring& c, std::string_view text) {
  std::string tag;
  auto f = fields(text, tag);
  if (tag != "fork") throw std::invalid_argument("not a fork record");
  ForkConfig k{vertex_field(f, "a"),  vertex_field(f, "b"),  vertex_field(f, "u"), vertex_field(f, "s1"),
               vertex_field(f, "s2"), vertex_field(f, "t1"), vertex_field(f, "t2"), 0, 0, 0, 0, 0};
  k.bu = color_of(c, k.b, k.u);
  k.us1 = color_of(c, k.u, k.s1);
  k.us2 = color_of(c, k.u, k.s2);
  k.s1t1 = color_of(c, k.s1, k.t1);
  k.s2t2 = color_of(c, k.s2, k.t2);
  return k;
}

BranchConfig parse_branch(const PartialColoring& c, std::string_view text) {
  std::string tag;
  auto f = fields(text, tag);
  BranchConfig b;
  if (tag == "short-branch") {
    b.short_form = true;
    b.s1 = vertex_field(f, "x");
    b.s2 = vertex_field(f, "y");
  } else if (tag == "branch") {
    b.s1 = vertex_field(f, "s1");
    b.s2 = vertex_field(f, "s2");
    b.t1 = vertex_field(f, "t1");
    b.t2 = vertex_field(f, "t2");
  } else {
    throw std::invalid_argument("not a branch record");
  }
  b.a = vertex_field(f, "a");
  b.b = vertex_field(f, "b");
  b.u = vertex_field(f, "u");
  b.bu = color_of(c, b.b, b.u);
  b.us1 = color_of(c, b.u, b.s1);
  b.us2 = color_of(c, b.u, b.s2);
  if (!b.short_form) {
    b.s1t1 = color_of(c, b.s1, b.t1);
    b.s2t2 = color_of(c, b.s2, b.t2);
  }
  return b;
}

}  // namespace ecol
