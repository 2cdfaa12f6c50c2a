#ifndef ECOL_VERIFY_HPP
#define ECOL_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecol/coloring.hpp"
#include "ecol/graph.hpp"
#include "ecol/overfull.hpp"
#include "ecol/solver.hpp"

namespace ecol {

enum class LemmaId {
  Val,              // Vizing's adjacency lemma
  MultiFan,         // multi-fans are elementary, (α,β)-chains join x and y_i
  Kierstead,        // Kierstead paths with three edges
  DegreeDichotomy,  // low-degree vertex splits the degrees in two bands
  XyExistence,      // two medium-degree vertices meeting φ̄(a) ∪ φ̄(b)
  Fork,             // no fork under the degree-sum condition
  Branch,           // |φ̄(t1) ∩ φ̄(t2) ∩ (φ̄(a) ∪ φ̄(b))| <= 4
  ShortBranch,      // max{d(x), d(y)} = Δ
  Theorem1,         // 3Δ - 5δ >= 2n - 7 forces overfull
  Conjecture,       // Δ-critical with 3Δ > n is overfull
};

std::string_view lemma_name(LemmaId id);
/// Accepts the names printed by lemma_name and the numeric aliases
/// "2.1".."2.8".
std::optional<LemmaId> parse_lemma_id(std::string_view s);
std::vector<LemmaId> all_lemmas();

/// Everything needed to rerun one failing check in isolation.
struct Witness {
  std::string lemma;
  std::string graph;  // graph6
  /// Oriented edge: (x, y) for VAL and multi-fans, (a, b) where the check
  /// distinguishes the ends; otherwise the uncolored edge in id order.
  std::optional<std::pair<Vertex, Vertex>> edge;
  int k = 0;
  std::string coloring;  // dump_coloring text, empty for graph-level checks
  std::string structure;
  std::string condition;
};

struct VerificationReport {
  std::string lemma;
  std::string graph;
  /// Graph-level precondition (Class 2, Δ-critical, ...) holds.
  bool applicable = true;
  std::string note;
  std::size_t instances_checked = 0;
  std::size_t applicable_instances = 0;
  std::vector<Witness> violations;
  std::chrono::nanoseconds elapsed{0};

  bool vacuous() const { return applicable_instances == 0; }
};

/// Lazily computed facts about one graph shared by the verifiers.
class LemmaContext {
 public:
  explicit LemmaContext(Graph g);

  const Graph& graph() const { return g_; }
  const std::string& graph6() const { return g6_; }
  int delta() const { return g_.max_degree(); }
  bool connected();
  bool class2();
  /// G - e is Δ-colorable (for Class 2: e is critical).
  bool critical(EdgeId e);
  /// nullopt when disconnected or edgeless.
  std::optional<bool> delta_critical();

 private:
  Graph g_;
  std::string g6_;
  std::optional<bool> connected_;
  std::optional<bool> class2_;
  std::vector<signed char> critical_;
  std::optional<std::optional<bool>> delta_critical_;
};

// --- single-instance checks (also used to replay witnesses) -----------------

struct Finding {
  std::string structure;
  std::string condition;
};

struct InstanceResult {
  bool applicable = false;
  std::optional<Finding> violation;
};

InstanceResult check_val_instance(const Graph& g, Vertex x, Vertex y);
InstanceResult check_multifan_instance(const PartialColoring& c, Vertex x);
InstanceResult check_kierstead_instance(const PartialColoring& c);
InstanceResult check_dichotomy_degrees(const Graph& g, Vertex a, Vertex v);
InstanceResult check_dichotomy_coloring(const PartialColoring& c, Vertex a, Vertex b);
InstanceResult check_xy_instance(const PartialColoring& c, Vertex a, Vertex b);
InstanceResult check_fork_instance(const PartialColoring& c);
InstanceResult check_branch_instance(const PartialColoring& c);
InstanceResult check_short_branch_instance(const PartialColoring& c);
InstanceResult check_theorem1_instance(const Graph& g);
InstanceResult check_conjecture_instance(const Graph& g);

/// Re-runs the check a witness came from; true if the same condition fails
/// again.
bool replay(const Witness& w);

// --- per-graph verifiers ----------------------------------------------------

VerificationReport verify_val(LemmaContext& ctx);
VerificationReport verify_multifan_lemma(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_kierstead_lemma(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_degree_dichotomy(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_xy_existence(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_fork_lemma(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_branch_lemma(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_short_branch_lemma(LemmaContext& ctx, const SamplingPolicy& policy);
VerificationReport verify_theorem1(LemmaContext& ctx);
/// Conjecture check on one graph plus the induced-overfull-subgraph count
/// bound for Δ > n/3.
VerificationReport verify_conjecture(LemmaContext& ctx, int subgraph_cap = kDefaultSubgraphCap);

VerificationReport verify(LemmaId id, LemmaContext& ctx, const SamplingPolicy& policy,
                          int subgraph_cap = kDefaultSubgraphCap);
VerificationReport verify(LemmaId id, const Graph& g, const SamplingPolicy& policy = {},
                          int subgraph_cap = kDefaultSubgraphCap);

// --- corpus scans -----------------------------------------------------------

struct CorpusEntry {
  std::size_t line = 0;
  std::string record;
  std::optional<VerificationReport> report;
  std::string parse_error;
};

struct ScanConfig {
  SamplingPolicy sampling;
  int subgraph_cap = kDefaultSubgraphCap;
  unsigned jobs = 1;
  /// Skip disconnected graphs instead of reporting them.
  bool connected_only = true;
};

/// Runs one verifier over every graph6 record. Results come back in input
/// order whatever the worker count. Blank lines are skipped.
std::vector<CorpusEntry> verify_corpus(LemmaId id, std::span<const std::string> records, const ScanConfig& cfg);

struct CorpusSummary {
  std::string lemma;
  std::size_t graphs = 0;
  std::size_t parse_failures = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t not_applicable = 0;
  std::size_t vacuous_graphs = 0;
  std::size_t instances_checked = 0;
  std::size_t applicable_instances = 0;
  std::size_t violations = 0;
};

CorpusSummary summarize(LemmaId id, std::span<const CorpusEntry> entries);

/// Conjecture scan bookkeeping beyond the generic summary.
struct ConjectureScan {
  CorpusSummary summary;
  std::size_t delta_critical = 0;
  std::size_t hypothesis_holds = 0;    // Δ-critical and 3Δ > n
  std::size_t counterexamples = 0;
  std::size_t boundary_cases = 0;      // Δ-critical, 3Δ = n, not overfull
  std::size_t niessen_checked = 0;     // graphs with 3Δ > n
  std::size_t niessen_exceptions = 0;
  std::size_t niessen_refused = 0;     // n above the subgraph-search cap
  std::vector<std::string> boundary_graphs;
};

ConjectureScan scan_conjecture(std::span<const std::string> records, const ScanConfig& cfg);

}  // namespace ecol

#endif  // ECOL_VERIFY_HPP
