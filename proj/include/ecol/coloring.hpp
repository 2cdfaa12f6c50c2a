#ifndef ECOL_COLORING_HPP
#define ECOL_COLORING_HPP

#include <bitset>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecol/graph.hpp"

namespace ecol {

/// Colors are 1..k; 0 marks an uncolored edge.
using Color = int;
inline constexpr Color kNoColor = 0;
inline constexpr int kMaxColors = 255;

/// Bit c stands for color c; bit 0 is never set.
using ColorSet = std::bitset<kMaxColors + 1>;

ColorSet palette(int k);
std::vector<Color> colors_of(const ColorSet& s);
/// "{1,3,4}"
std::string format_colors(const ColorSet& s);

/// When enabled, every coloring mutation re-derives the per-vertex color
/// tables from scratch and compares them to the incrementally maintained
/// ones. Off by default.
void set_debug_checks(bool on);
bool debug_checks();

namespace detail {

/// Edge colors plus, per vertex, the present-color set and a color -> edge
/// index. Allows any number of uncolored edges; callers enforce the rest.
class ColorTable {
 public:
  ColorTable() = default;
  ColorTable(std::shared_ptr<const Graph> host, int k);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
  int k() const { return k_; }

  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  std::span<const Color> colors() const { return colors_; }
  const ColorSet& present(Vertex v) const { return present_[static_cast<std::size_t>(v)]; }
  ColorSet missing(Vertex v) const { return palette(k_) & ~present(v); }
  bool is_free(Vertex v, Color c) const { return !present(v).test(static_cast<std::size_t>(c)); }
  /// Edge at v colored c, or -1.
  EdgeId edge_at(Vertex v, Color c) const {
    return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)];
  }

  /// Colors an uncolored edge; c must be free at both endpoints.
  void assign(EdgeId e, Color c);
  void clear(EdgeId e);
  /// Recolors a set of edges at once; the end state must be proper.
  void recolor(std::span<const std::pair<EdgeId, Color>> changes);

  /// Throws std::logic_error if the incremental tables disagree with a
  /// from-scratch rebuild or the coloring is improper.
  void verify() const;

  friend bool operator==(const ColorTable& a, const ColorTable& b) {
    return a.k_ == b.k_ && a.colors_ == b.colors_ && *a.host_ == *b.host_;
  }

 private:
  EdgeId& slot(Vertex v, Color c) {
    return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)];
  }

  std::shared_ptr<const Graph> host_;
  int k_ = 0;
  std::vector<Color> colors_;
  std::vector<ColorSet> present_;
  std::vector<EdgeId> at_;
};

}  // namespace detail

/// Proper k-edge-coloring of G - e with e the single uncolored edge (or a
/// coloring of all of G when there is none). Proper by construction.
class PartialColoring {
 public:
  /// colors[id] is the color of edge id, kNoColor for the uncolored edge.
  /// Throws std::invalid_argument if a color is outside [k], two adjacent
  /// edges share a color, or more than one edge is uncolored.
  PartialColoring(std::shared_ptr<const Graph> host, int k, std::span<const Color> colors);
  PartialColoring(const Graph& host, int k, std::span<const Color> colors)
      : PartialColoring(std::make_shared<const Graph>(host), k, colors) {}
  /// Colors given per edge; any edge not listed is uncolored.
  static PartialColoring from_edges(const Graph& host, int k,
                                    std::initializer_list<std::pair<Edge, Color>> assignment);

  const Graph& host() const { return table_.host(); }
  const std::shared_ptr<const Graph>& host_ptr() const { return table_.host_ptr(); }
  int k() const { return table_.k(); }
  std::optional<EdgeId> uncolored() const { return uncolored_; }

  Color color(EdgeId e) const { return table_.color(e); }
  std::span<const Color> colors() const { return table_.colors(); }
  const ColorSet& present(Vertex v) const { return table_.present(v); }
  ColorSet missing(Vertex v) const { return table_.missing(v); }
  /// Edge at v with color c, if any.
  std::optional<EdgeId> edge_with(Vertex v, Color c) const;

  void check_invariants() const;
  const detail::ColorTable& table() const { return table_; }
  /// Wraps a table built elsewhere; throws std::invalid_argument if more
  /// than one edge is uncolored.
  static PartialColoring from_table(detail::ColorTable t);

  friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
    return a.uncolored_ == b.uncolored_ && a.table_ == b.table_;
  }

 private:
  PartialColoring(detail::ColorTable t, std::optional<EdgeId> uncolored)
      : table_(std::move(t)), uncolored_(uncolored) {}

  detail::ColorTable table_;
  std::optional<EdgeId> uncolored_;
};

/// Assignment that may violate properness, e.g. after swapping colors on a
/// proper subchain. Conflicts are adjacent same-colored edge pairs (lower id
/// first), sorted.
class RelaxedColoring {
 public:
  RelaxedColoring(std::shared_ptr<const Graph> host, int k, std::vector<Color> colors);

  const Graph& host() const { return *host_; }
  int k() const { return k_; }
  Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  std::span<const Color> colors() const { return colors_; }
  bool proper() const { return conflicts_.empty(); }
  const std::vector<std::pair<EdgeId, EdgeId>>& conflicts() const { return conflicts_; }
  std::optional<PartialColoring> to_proper() const;

 private:
  std::shared_ptr<const Graph> host_;
  int k_;
  std::vector<Color> colors_;
  std::vector<std::pair<EdgeId, EdgeId>> conflicts_;
};

ColorSet missing_set(const PartialColoring& c, Vertex u);
/// Missing sets pairwise disjoint.
bool is_elementary(const PartialColoring& c, std::span<const Vertex> xs);

enum class ChainKind { Path, Cycle };

/// One (α,β)-chain. For a path, vertices.size() == edges.size() + 1 and edge
/// i joins vertices i and i+1. For a cycle both have equal size and the last
/// edge closes back to vertices[0]. Traversal is canonical: a path starts at
/// its lower-labeled end, a cycle at its lowest vertex heading towards the
/// lower of that vertex's two cycle neighbors. Chains of the same component
/// therefore compare equal.
struct Chain {
  Color alpha = 0;
  Color beta = 0;
  ChainKind kind = ChainKind::Path;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  std::vector<Color> step_colors;

  bool contains(Vertex v) const;
  std::optional<std::size_t> position(Vertex v) const;
  bool is_path() const { return kind == ChainKind::Path; }
  /// Path end vertices; both equal for a single-vertex chain.
  std::pair<Vertex, Vertex> ends() const;
  bool disjoint_from(const Chain& other) const;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Throws std::invalid_argument when α == β or either lies outside [k].
Chain chain_at(const PartialColoring& c, Vertex u, Color alpha, Color beta);

/// Swaps α and β along the full chain. Throws std::invalid_argument if `ch`
/// is not a maximal chain of c.
PartialColoring kempe_change(const PartialColoring& c, const Chain& ch);

/// Swaps α and β only on the edges between a and b along a path chain.
RelaxedColoring kempe_change_subchain(const PartialColoring& c, const Chain& ch, Vertex a, Vertex b);

/// "uv: α -> β". Throws std::invalid_argument for the uncolored edge or a
/// color outside [k].
RelaxedColoring recolor_edge(const PartialColoring& c, EdgeId e, Color beta);

/// Walking the path chain from u, x is reached strictly before y.
bool meets_before(const Chain& ch, Vertex u, Vertex x, Vertex y);

/// One "u v c" line per colored edge and "uncolored u v" for the uncolored
/// one, in edge-id order. Colors are 1-based.
std::string dump_coloring(const Graph& g, std::span<const Color> colors);
std::string dump_coloring(const PartialColoring& c);
PartialColoring parse_coloring(std::shared_ptr<const Graph> host, int k, std::string_view text);

std::string format_chain(const Chain& ch);

}  // namespace ecol

#endif  // ECOL_COLORING_HPP
