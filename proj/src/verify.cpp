#include "ecol/verify.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

#include "ecol/graph6.hpp"
#include "ecol/overfull.hpp"
#include "ecol/structures.hpp"

namespace ecol {

namespace {

struct LemmaInfo {
  LemmaId id;
  std::string_view name;
  std::string_view alias;
};

constexpr LemmaInfo kLemmas[] = {
    {LemmaId::Val, "val", "2.1"},
    {LemmaId::MultiFan, "multifan", "2.2"},
    {LemmaId::Kierstead, "kierstead", "2.3"},
    {LemmaId::DegreeDichotomy, "dichotomy", "2.4"},
    {LemmaId::XyExistence, "xy", "2.5"},
    {LemmaId::Fork, "fork", "2.6"},
    {LemmaId::Branch, "branch", "2.7"},
    {LemmaId::ShortBranch, "short-branch", "2.8"},
    {LemmaId::Theorem1, "theorem1", "thm1"},
    {LemmaId::Conjecture, "conjecture", "overfull-conjecture"},
};

constexpr std::string_view kNiessen = "niessen";

std::string pair_text(const ColorSet& s) { return format_colors(s); }

}  // namespace

std::string_view lemma_name(LemmaId id) {
  for (const auto& l : kLemmas)
    if (l.id == id) return l.name;
  return "unknown";
}

std::optional<LemmaId> parse_lemma_id(std::string_view s) {
  if (s.starts_with("lemma")) s.remove_prefix(5);
  for (const auto& l : kLemmas)
    if (s == l.name || s == l.alias) return l.id;
  return std::nullopt;
}

std::vector<LemmaId> all_lemmas() {
  std::vector<LemmaId> out;
  for (const auto& l : kLemmas) out.push_back(l.id);
  return out;
}

// --- LemmaContext -------------------------------------------------------------

LemmaContext::LemmaContext(Graph g) : g_(std::move(g)), g6_(encode_graph6(g_)), critical_(g_.size(), -1) {}

bool LemmaContext::connected() {
  if (!connected_) connected_ = is_connected(g_);
  return *connected_;
}

bool LemmaContext::class2() {
  if (!class2_) class2_ = g_.size() > 0 && !edge_colorable(g_, g_.max_degree());
  return *class2_;
}

bool LemmaContext::critical(EdgeId e) {
  auto& slot = critical_[static_cast<std::size_t>(e)];
  if (slot < 0) slot = edge_colorable(g_.without_edge(e), g_.max_degree()) ? 1 : 0;
  return slot == 1;
}

std::optional<bool> LemmaContext::delta_critical() {
  if (!delta_critical_) {
    if (g_.size() == 0 || !connected()) {
      delta_critical_ = std::optional<bool>{};
    } else if (!class2()) {
      delta_critical_ = std::optional<bool>{false};
    } else {
      bool all = true;
      for (std::size_t e = 0; e < g_.size() && all; ++e) all = critical(static_cast<EdgeId>(e));
      delta_critical_ = std::optional<bool>{all};
    }
  }
  return *delta_critical_;
}

// --- instance checks ----------------------------------------------------------

namespace {

int third_bound_lhs(int deg) { return 3 * deg; }

// 3 d(a) <= 2Δ - n + 2
bool low_vertex(const Graph& g, Vertex a) {
  return third_bound_lhs(g.degree(a)) <= 2 * g.max_degree() - g.order() + 2;
}

bool uncolored_is(const PartialColoring& c, Vertex a, Vertex b) {
  auto unc = c.uncolored();
  return unc && c.host().edge(*unc) == make_edge(a, b);
}

InstanceResult violated(std::string structure, std::string condition) {
  return {true, Finding{std::move(structure), std::move(condition)}};
}

}  // namespace

InstanceResult check_val_instance(const Graph& g, Vertex x, Vertex y) {
  if (!g.adjacent(x, y)) throw std::invalid_argument("VAL instance needs an edge");
  const int delta = g.max_degree();
  int count = 0;
  for (Vertex w : g.neighbors(x))
    if (w != y && g.degree(w) == delta) ++count;
  const int need = delta - g.degree(y) + 1;
  if (count < need)
    return violated("x=" + std::to_string(x) + " y=" + std::to_string(y),
                    "x has " + std::to_string(count) + " max-degree neighbors besides y, needs " + std::to_string(need));
  return {true, std::nullopt};
}

InstanceResult check_multifan_instance(const PartialColoring& c, Vertex x) {
  MultiFan fan = maximal_multifan(c, x);
  const auto& vf = fan.seq.vertices;
  if (!is_elementary(c, vf)) return violated(format_multifan(c, fan), "(1) V(F) is not elementary");
  const ColorSet mx = c.missing(x);
  for (std::size_t i = 1; i < vf.size(); ++i) {
    const Vertex yi = vf[i];
    for (Color alpha : colors_of(mx)) {
      for (Color beta : colors_of(c.missing(yi))) {
        Chain ch = chain_at(c, x, alpha, beta);
        bool joins = ch.is_path() && ((ch.ends().first == x && ch.ends().second == yi) ||
                                      (ch.ends().first == yi && ch.ends().second == x));
        if (!joins)
          return violated(format_multifan(c, fan), "(2) P_x(" + std::to_string(alpha) + "," + std::to_string(beta) +
                                                       ") does not end at x and y" + std::to_string(i) + ": " +
                                                       format_chain(ch));
      }
    }
  }
  return {true, std::nullopt};
}

InstanceResult check_kierstead_instance(const PartialColoring& c) {
  InstanceResult out;
  const int delta = c.host().max_degree();
  for_each_kierstead_path(c, 3, 3, [&](const KiersteadPath& k) {
    out.applicable = true;
    if (out.violation) return;
    const auto& y = k.seq.vertices;
    const Graph& g = c.host();
    if (std::min(g.degree(y[1]), g.degree(y[2])) < delta && !is_elementary(c, y)) {
      out.violation = Finding{format_kierstead(c, k), "(1) min{d(y1),d(y2)} < Δ but V(K) is not elementary"};
      return;
    }
    ColorSet meet = c.missing(y[3]) & (c.missing(y[0]) | c.missing(y[1]));
    if (meet.count() > 1)
      out.violation = Finding{format_kierstead(c, k), "(2) |φ̄(y3) ∩ (φ̄(y0) ∪ φ̄(y1))| = " +
                                                          std::to_string(meet.count()) + " " + pair_text(meet)};
  });
  return out;
}

InstanceResult check_dichotomy_degrees(const Graph& g, Vertex a, Vertex v) {
  if (a == v || !low_vertex(g, a)) return {};
  const int n = g.order();
  const int delta = g.max_degree();
  const int da = g.degree(a);
  const int dv = g.degree(v);
  if (dv <= n - delta + 2 * da - 6 || dv >= delta - da + 1) return {true, std::nullopt};
  return violated("a=" + std::to_string(a) + " v=" + std::to_string(v),
                  "d(v)=" + std::to_string(dv) + " lies strictly between " + std::to_string(n - delta + 2 * da - 6) +
                      " and " + std::to_string(delta - da + 1));
}

InstanceResult check_dichotomy_coloring(const PartialColoring& c, Vertex a, Vertex b) {
  const Graph& g = c.host();
  const int delta = g.max_degree();
  if (!low_vertex(g, a) || g.degree(b) != delta || !uncolored_is(c, a, b) || c.k() != delta) return {};
  const ColorSet m_ab = c.missing(a) | c.missing(b);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == a || g.degree(v) < delta - g.degree(a) + 1) continue;
    ColorSet meet = c.missing(v) & m_ab;
    if (meet.count() > 1)
      return violated("a=" + std::to_string(a) + " b=" + std::to_string(b) + " v=" + std::to_string(v),
                      "|φ̄(v) ∩ (φ̄(a) ∪ φ̄(b))| = " + std::to_string(meet.count()) + " " + pair_text(meet));
  }
  return {true, std::nullopt};
}

InstanceResult check_xy_instance(const PartialColoring& c, Vertex a, Vertex b) {
  const Graph& g = c.host();
  const int n = g.order();
  const int delta = g.max_degree();
  const int dmin = g.min_degree();
  if (is_overfull(g) || g.degree(a) != dmin || !low_vertex(g, a) || g.degree(b) != delta ||
      !uncolored_is(c, a, b) || c.k() != delta)
    return {};
  std::vector<Vertex> low;
  for (Vertex t = 0; t < n; ++t)
    if (t != a && g.degree(t) <= n - delta + 2 * dmin - 6) low.push_back(t);
  if (low.size() > 1) return {};
  // No t: exclude only a and b.
  const ColorSet m_ab = c.missing(a) | c.missing(b);
  std::vector<Vertex> good;
  for (Vertex v = 0; v < n; ++v) {
    if (v == a || v == b || (!low.empty() && v == low.front())) continue;
    int dv = g.degree(v);
    if (dv < delta - dmin + 1 || dv >= delta) continue;
    if ((c.missing(v) & m_ab).any()) good.push_back(v);
  }
  if (good.size() >= 2) return {true, std::nullopt};
  return violated("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                      (low.empty() ? std::string(" t=none") : " t=" + std::to_string(low.front())),
                  "only " + std::to_string(good.size()) + " candidate vertices for x,y");
}

namespace {

// Some 7-vertex tuple of fork shape at (a, b) with Δ >= d(a) + d(t1) + d(t2) + 1.
bool fork_degree_shape_exists(const Graph& g, Vertex a, Vertex b) {
  const int delta = g.max_degree();
  const int budget = delta - g.degree(a) - 1;  // need d(t1) + d(t2) <= budget
  if (budget < 2 * g.min_degree()) return false;
  for (Vertex u : g.neighbors(b)) {
    if (u == a) continue;
    for (Vertex s1 : g.neighbors(u)) {
      if (s1 == a || s1 == b) continue;
      for (Vertex s2 : g.neighbors(u)) {
        if (s2 <= s1 || s2 == a || s2 == b) continue;
        for (Vertex t1 : g.neighbors(s1)) {
          if (t1 == a || t1 == b || t1 == u || t1 == s2) continue;
          for (Vertex t2 : g.neighbors(s2)) {
            if (t2 == a || t2 == b || t2 == u || t2 == s1 || t2 == t1) continue;
            if (g.degree(t1) + g.degree(t2) <= budget) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

InstanceResult check_fork_instance(const PartialColoring& c) {
  const Graph& g = c.host();
  auto unc = c.uncolored();
  if (!unc || c.k() != g.max_degree()) return {};
  const Edge& e = g.edge(*unc);
  InstanceResult out;
  out.applicable = fork_degree_shape_exists(g, e.u, e.v) || fork_degree_shape_exists(g, e.v, e.u);
  if (!out.applicable) return out;
  for (const ForkConfig& f : find_forks(c)) {
    if (g.max_degree() >= g.degree(f.a) + g.degree(f.t1) + g.degree(f.t2) + 1) {
      out.violation = Finding{format_fork(f), "fork present although Δ >= d(a) + d(t1) + d(t2) + 1"};
      break;
    }
  }
  return out;
}

InstanceResult check_branch_instance(const PartialColoring& c) {
  InstanceResult out;
  if (c.k() != c.host().max_degree()) return out;
  for (const BranchConfig& br : find_branches(c, false)) {
    out.applicable = true;
    ColorSet triple = c.missing(br.t1) & c.missing(br.t2) & (c.missing(br.a) | c.missing(br.b));
    if (triple.count() > 4) {
      out.violation = Finding{format_branch(br), "|φ̄(t1) ∩ φ̄(t2) ∩ (φ̄(a) ∪ φ̄(b))| = " +
                                                     std::to_string(triple.count()) + " " + pair_text(triple)};
      break;
    }
  }
  return out;
}

InstanceResult check_short_branch_instance(const PartialColoring& c) {
  InstanceResult out;
  const Graph& g = c.host();
  if (c.k() != g.max_degree()) return out;
  for (const BranchConfig& br : find_branches(c, true)) {
    out.applicable = true;
    if (std::max(g.degree(br.x()), g.degree(br.y())) != g.max_degree()) {
      out.violation = Finding{format_branch(br), "max{d(x), d(y)} = " +
                                                     std::to_string(std::max(g.degree(br.x()), g.degree(br.y()))) +
                                                     " < Δ"};
      break;
    }
  }
  return out;
}

InstanceResult check_theorem1_instance(const Graph& g) {
  const int n = g.order();
  const int delta = g.max_degree();
  const int dmin = g.min_degree();
  if (3 * delta - 5 * dmin < 2 * n - 7) return {};
  if (is_overfull(g)) return {true, std::nullopt};
  return violated("n=" + std::to_string(n) + " Δ=" + std::to_string(delta) + " δ=" + std::to_string(dmin),
                  "3Δ - 5δ >= 2n - 7 but G is not overfull");
}

InstanceResult check_conjecture_instance(const Graph& g) {
  if (3 * g.max_degree() <= g.order()) return {};
  if (is_overfull(g)) return {true, std::nullopt};
  return violated("n=" + std::to_string(g.order()) + " Δ=" + std::to_string(g.max_degree()),
                  "Δ > n/3 but G is not overfull");
}

namespace {

InstanceResult check_niessen_instance(const Graph& g, int cap) {
  const int n = g.order();
  const int delta = g.max_degree();
  if (3 * delta <= n) return {};
  auto subs = find_overfull_subgraphs(g, cap);
  const std::size_t limit = 2 * delta >= n ? 1 : 3;
  if (subs.size() <= limit) return {true, std::nullopt};
  return violated("count=" + std::to_string(subs.size()),
                  std::to_string(subs.size()) + " induced overfull subgraphs with Δ(H) = Δ(G), bound " +
                      std::to_string(limit));
}

// --- report plumbing ----------------------------------------------------------

class ReportBuilder {
 public:
  ReportBuilder(LemmaId id, const LemmaContext& ctx) : start_(std::chrono::steady_clock::now()) {
    r_.lemma = std::string(lemma_name(id));
    r_.graph = ctx.graph6();
  }

  VerificationReport not_applicable(std::string why) {
    r_.applicable = false;
    r_.note = std::move(why);
    return finish();
  }

  void add(const InstanceResult& res, const Witness& base) {
    ++r_.instances_checked;
    if (!res.applicable) return;
    ++r_.applicable_instances;
    if (!res.violation) return;
    Witness w = base;
    w.lemma = r_.lemma;
    w.graph = r_.graph;
    w.structure = res.violation->structure;
    w.condition = res.violation->condition;
    r_.violations.push_back(std::move(w));
  }

  VerificationReport& report() { return r_; }

  VerificationReport finish() {
    r_.elapsed = std::chrono::steady_clock::now() - start_;
    return std::move(r_);
  }

 private:
  VerificationReport r_;
  std::chrono::steady_clock::time_point start_;
};

Witness coloring_witness(const PartialColoring& c, Vertex first, Vertex second) {
  Witness w;
  w.edge = std::pair{first, second};
  w.k = c.k();
  w.coloring = dump_coloring(c);
  return w;
}

// Calls fn(edge id, coloring) for each sampled Δ-coloring of G - e over
// every edge e with G - e Δ-colorable.
template <typename Fn>
void for_each_critical_coloring(LemmaContext& ctx, const SamplingPolicy& policy, Fn&& fn) {
  const Graph& g = ctx.graph();
  for (std::size_t id = 0; id < g.size(); ++id) {
    auto e = static_cast<EdgeId>(id);
    if (!ctx.critical(e)) continue;
    ColoringSample s = sample_colorings(g, g.edge(e), ctx.delta(), policy);
    for (const PartialColoring& c : s.colorings) fn(e, c);
  }
}

std::optional<VerificationReport> require_class2(ReportBuilder& rb, LemmaContext& ctx) {
  if (ctx.graph().size() == 0) return rb.not_applicable("edgeless");
  if (!ctx.class2()) return rb.not_applicable("Class 1");
  return std::nullopt;
}

std::optional<VerificationReport> require_delta_critical(ReportBuilder& rb, LemmaContext& ctx) {
  auto dc = ctx.delta_critical();
  if (!dc) return rb.not_applicable(ctx.graph().size() == 0 ? "edgeless" : "disconnected");
  if (!*dc) return rb.not_applicable("not Δ-critical");
  return std::nullopt;
}

}  // namespace

// --- verifiers ----------------------------------------------------------------

VerificationReport verify_val(LemmaContext& ctx) {
  ReportBuilder rb(LemmaId::Val, ctx);
  if (auto na = require_class2(rb, ctx)) return *na;
  const Graph& g = ctx.graph();
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    bool crit = ctx.critical(static_cast<EdgeId>(id));
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      Witness w;
      w.edge = std::pair{x, y};
      rb.add(crit ? check_val_instance(g, x, y) : InstanceResult{}, w);
    }
  }
  return rb.finish();
}

VerificationReport verify_multifan_lemma(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::MultiFan, ctx);
  if (auto na = require_class2(rb, ctx)) return *na;
  for_each_critical_coloring(ctx, policy, [&](EdgeId e, const PartialColoring& c) {
    const Edge& ed = ctx.graph().edge(e);
    for (auto [x, y] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}})
      rb.add(check_multifan_instance(c, x), coloring_witness(c, x, y));
  });
  return rb.finish();
}

VerificationReport verify_kierstead_lemma(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::Kierstead, ctx);
  if (auto na = require_class2(rb, ctx)) return *na;
  for_each_critical_coloring(ctx, policy, [&](EdgeId e, const PartialColoring& c) {
    const Edge& ed = ctx.graph().edge(e);
    rb.add(check_kierstead_instance(c), coloring_witness(c, ed.u, ed.v));
  });
  return rb.finish();
}

VerificationReport verify_degree_dichotomy(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::DegreeDichotomy, ctx);
  if (auto na = require_delta_critical(rb, ctx)) return *na;
  const Graph& g = ctx.graph();
  for (Vertex a = 0; a < g.order(); ++a) {
    if (!low_vertex(g, a)) continue;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == a) continue;
      Witness w;
      w.edge = std::pair{a, v};
      rb.add(check_dichotomy_degrees(g, a, v), w);
    }
    for (Vertex b : g.neighbors(a)) {
      if (g.degree(b) != ctx.delta()) continue;
      ColoringSample s = sample_colorings(g, make_edge(a, b), ctx.delta(), policy);
      for (const PartialColoring& c : s.colorings) rb.add(check_dichotomy_coloring(c, a, b), coloring_witness(c, a, b));
    }
  }
  return rb.finish();
}

VerificationReport verify_xy_existence(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::XyExistence, ctx);
  if (auto na = require_delta_critical(rb, ctx)) return *na;
  const Graph& g = ctx.graph();
  if (is_overfull(g)) return rb.not_applicable("overfull");
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) != g.min_degree() || !low_vertex(g, a)) continue;
    for (Vertex b : g.neighbors(a)) {
      if (g.degree(b) != ctx.delta()) continue;
      ColoringSample s = sample_colorings(g, make_edge(a, b), ctx.delta(), policy);
      for (const PartialColoring& c : s.colorings) rb.add(check_xy_instance(c, a, b), coloring_witness(c, a, b));
    }
  }
  return rb.finish();
}

VerificationReport verify_fork_lemma(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::Fork, ctx);
  if (auto na = require_delta_critical(rb, ctx)) return *na;
  const Graph& g = ctx.graph();
  if (g.order() < 7) {
    rb.report().note = "n < 7";
    return rb.finish();
  }
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    // Skip sampling when no tuple can satisfy the degree condition.
    if (!fork_degree_shape_exists(g, e.u, e.v) && !fork_degree_shape_exists(g, e.v, e.u)) {
      ++rb.report().instances_checked;
      continue;
    }
    ColoringSample s = sample_colorings(g, e, ctx.delta(), policy);
    for (const PartialColoring& c : s.colorings) rb.add(check_fork_instance(c), coloring_witness(c, e.u, e.v));
  }
  return rb.finish();
}

VerificationReport verify_branch_lemma(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::Branch, ctx);
  if (auto na = require_class2(rb, ctx)) return *na;
  if (ctx.graph().order() < 7) {
    rb.report().note = "n < 7";
    return rb.finish();
  }
  for_each_critical_coloring(ctx, policy, [&](EdgeId e, const PartialColoring& c) {
    const Edge& ed = ctx.graph().edge(e);
    rb.add(check_branch_instance(c), coloring_witness(c, ed.u, ed.v));
  });
  return rb.finish();
}

VerificationReport verify_short_branch_lemma(LemmaContext& ctx, const SamplingPolicy& policy) {
  ReportBuilder rb(LemmaId::ShortBranch, ctx);
  if (auto na = require_class2(rb, ctx)) return *na;
  if (ctx.graph().order() < 5) {
    rb.report().note = "n < 5";
    return rb.finish();
  }
  for_each_critical_coloring(ctx, policy, [&](EdgeId e, const PartialColoring& c) {
    const Edge& ed = ctx.graph().edge(e);
    rb.add(check_short_branch_instance(c), coloring_witness(c, ed.u, ed.v));
  });
  return rb.finish();
}

VerificationReport verify_theorem1(LemmaContext& ctx) {
  ReportBuilder rb(LemmaId::Theorem1, ctx);
  if (auto na = require_delta_critical(rb, ctx)) return *na;
  rb.add(check_theorem1_instance(ctx.graph()), Witness{});
  return rb.finish();
}

VerificationReport verify_conjecture(LemmaContext& ctx, int subgraph_cap) {
  ReportBuilder rb(LemmaId::Conjecture, ctx);
  const Graph& g = ctx.graph();
  if (g.size() == 0) return rb.not_applicable("edgeless");
  if (!ctx.connected()) return rb.not_applicable("disconnected");
  if (3 * g.max_degree() > g.order()) {
    Witness w;
    if (g.order() <= subgraph_cap) {
      InstanceResult res = check_niessen_instance(g, subgraph_cap);
      rb.add(res, w);
      if (!rb.report().violations.empty()) rb.report().violations.back().lemma = std::string(kNiessen);
    } else {
      rb.report().note = "subgraph count skipped: n above cap";
    }
  }
  if (ctx.delta_critical().value_or(false)) {
    const std::size_t before = rb.report().violations.size();
    rb.add(check_conjecture_instance(g), Witness{});
    if (rb.report().violations.size() == before && 3 * g.max_degree() == g.order() && !is_overfull(g))
      rb.report().note = "boundary: Δ = n/3, Δ-critical, not overfull";
  }
  return rb.finish();
}

VerificationReport verify(LemmaId id, LemmaContext& ctx, const SamplingPolicy& policy, int subgraph_cap) {
  switch (id) {
    case LemmaId::Val: return verify_val(ctx);
    case LemmaId::MultiFan: return verify_multifan_lemma(ctx, policy);
    case LemmaId::Kierstead: return verify_kierstead_lemma(ctx, policy);
    case LemmaId::DegreeDichotomy: return verify_degree_dichotomy(ctx, policy);
    case LemmaId::XyExistence: return verify_xy_existence(ctx, policy);
    case LemmaId::Fork: return verify_fork_lemma(ctx, policy);
    case LemmaId::Branch: return verify_branch_lemma(ctx, policy);
    case LemmaId::ShortBranch: return verify_short_branch_lemma(ctx, policy);
    case LemmaId::Theorem1: return verify_theorem1(ctx);
    case LemmaId::Conjecture: return verify_conjecture(ctx, subgraph_cap);
  }
  throw std::logic_error("unknown lemma id");
}

VerificationReport verify(LemmaId id, const Graph& g, const SamplingPolicy& policy, int subgraph_cap) {
  LemmaContext ctx(g);
  return verify(id, ctx, policy, subgraph_cap);
}

// --- replay -------------------------------------------------------------------

bool replay(const Witness& w) {
  Graph g = parse_graph6(w.graph);
  auto host = std::make_shared<const Graph>(g);
  std::optional<PartialColoring> c;
  if (!w.coloring.empty()) c = parse_coloring(host, w.k, w.coloring);
  auto need_edge = [&] {
    if (!w.edge) throw std::invalid_argument("witness lacks an edge");
    return *w.edge;
  };
  auto need_coloring = [&]() -> const PartialColoring& {
    if (!c) throw std::invalid_argument("witness lacks a coloring");
    return *c;
  };

  InstanceResult res;
  if (w.lemma == kNiessen) {
    res = check_niessen_instance(g, std::max(g.order(), kDefaultSubgraphCap));
  } else {
    auto id = parse_lemma_id(w.lemma);
    if (!id) throw std::invalid_argument("unknown lemma '" + w.lemma + "'");
    switch (*id) {
      case LemmaId::Val: {
        auto [x, y] = need_edge();
        res = check_val_instance(g, x, y);
        break;
      }
      case LemmaId::MultiFan: res = check_multifan_instance(need_coloring(), need_edge().first); break;
      case LemmaId::Kierstead: res = check_kierstead_instance(need_coloring()); break;
      case LemmaId::DegreeDichotomy: {
        auto [a, v] = need_edge();
        res = c ? check_dichotomy_coloring(*c, a, v) : check_dichotomy_degrees(g, a, v);
        break;
      }
      case LemmaId::XyExistence: {
        auto [a, b] = need_edge();
        res = check_xy_instance(need_coloring(), a, b);
        break;
      }
      case LemmaId::Fork: res = check_fork_instance(need_coloring()); break;
      case LemmaId::Branch: res = check_branch_instance(need_coloring()); break;
      case LemmaId::ShortBranch: res = check_short_branch_instance(need_coloring()); break;
      case LemmaId::Theorem1: res = check_theorem1_instance(g); break;
      case LemmaId::Conjecture: res = check_conjecture_instance(g); break;
    }
  }
  return res.violation && res.violation->condition == w.condition && res.violation->structure == w.structure;
}

// --- corpus -------------------------------------------------------------------

namespace {

template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return ch == ' ' || ch == '\r' || ch == '\n' || ch == '\t'; });
}

}  // namespace

std::vector<CorpusEntry> verify_corpus(LemmaId id, std::span<const std::string> records, const ScanConfig& cfg) {
  std::vector<CorpusEntry> entries;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (blank(records[i])) continue;
    CorpusEntry e;
    e.line = i + 1;
    e.record = records[i];
    entries.push_back(std::move(e));
  }
  parallel_for(entries.size(), cfg.jobs, [&](std::size_t i) {
    CorpusEntry& e = entries[i];
    Graph g;
    try {
      g = parse_graph6(e.record);
    } catch (const std::exception& ex) {
      e.parse_error = ex.what();
      return;
    }
    if (cfg.connected_only && !is_connected(g)) return;
    LemmaContext ctx(std::move(g));
    e.report = verify(id, ctx, cfg.sampling, cfg.subgraph_cap);
  });
  return entries;
}

CorpusSummary summarize(LemmaId id, std::span<const CorpusEntry> entries) {
  CorpusSummary s;
  s.lemma = std::string(lemma_name(id));
  for (const CorpusEntry& e : entries) {
    if (!e.parse_error.empty()) {
      ++s.parse_failures;
      continue;
    }
    if (!e.report) {
      ++s.skipped_disconnected;
      continue;
    }
    ++s.graphs;
    const VerificationReport& r = *e.report;
    if (!r.applicable) {
      ++s.not_applicable;
      continue;
    }
    if (r.vacuous()) ++s.vacuous_graphs;
    s.instances_checked += r.instances_checked;
    s.applicable_instances += r.applicable_instances;
    s.violations += r.violations.size();
  }
  return s;
}

ConjectureScan scan_conjecture(std::span<const std::string> records, const ScanConfig& cfg) {
  ScanConfig c = cfg;
  c.connected_only = true;
  auto entries = verify_corpus(LemmaId::Conjecture, records, c);
  ConjectureScan scan;
  scan.summary = summarize(LemmaId::Conjecture, entries);
  for (const CorpusEntry& e : entries) {
    if (!e.report || !e.report->applicable) continue;
    Graph g = parse_graph6(e.record);
    const bool niessen_band = 3 * g.max_degree() > g.order();
    if (niessen_band) {
      if (g.order() <= cfg.subgraph_cap)
        ++scan.niessen_checked;
      else
        ++scan.niessen_refused;
    }
    for (const Witness& w : e.report->violations) {
      if (w.lemma == kNiessen)
        ++scan.niessen_exceptions;
      else
        ++scan.counterexamples;
    }
    LemmaContext ctx(g);
    if (!ctx.delta_critical().value_or(false)) continue;
    ++scan.delta_critical;
    if (niessen_band) ++scan.hypothesis_holds;
    if (3 * g.max_degree() == g.order() && !is_overfull(g)) {
      ++scan.boundary_cases;
      scan.boundary_graphs.push_back(e.report->graph);
    }
  }
  return scan;
}

}  // namespace ecol
