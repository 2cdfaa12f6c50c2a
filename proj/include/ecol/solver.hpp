#ifndef ECOL_SOLVER_HPP
#define ECOL_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ecol/coloring.hpp"
#include "ecol/graph.hpp"

namespace ecol {

enum class ClassLabel { Class1, Class2 };

const char* to_string(ClassLabel c);

struct ColoringCertificate {
  PartialColoring coloring;
  int colors_used = 0;
};

/// Proper k-edge-coloring of g if one exists. Exhaustive backtracking over a
/// fixed edge order with forward checking; colors are introduced in
/// increasing order so the first edge is pinned to color 1.
std::optional<ColoringCertificate> edge_colorable(const Graph& g, int k);

/// Δ if g is Δ-colorable, otherwise Δ + 1. No other k is tried.
int chromatic_index(const Graph& g);

/// Throws std::invalid_argument for an edgeless graph.
ClassLabel classify(const Graph& g);

/// χ'(g - e) < χ'(g). Throws std::invalid_argument if e is not an edge.
bool is_critical_edge(const Graph& g, Edge e);

/// Class 2 with every edge critical. nullopt when g is disconnected or
/// edgeless. Stops at the first non-critical edge.
std::optional<bool> is_delta_critical(const Graph& g);

/// Proper coloring with at most Δ + 1 colors. Edges are inserted in id
/// order; each is resolved by rotating a fan at its lower endpoint after at
/// most one Kempe change. Fan extension takes the lowest eligible neighbor
/// and free colors are picked lowest first.
ColoringCertificate vizing_color(const Graph& g);

// --- enumeration ------------------------------------------------------------

struct ColoringSample {
  std::vector<PartialColoring> colorings;
  /// Every k-coloring of g - e is listed.
  bool exhaustive = false;
  /// g - e has at least one k-coloring.
  bool colorable = false;
};

/// Distinct proper k-colorings of g - e, each a PartialColoring of g with e
/// uncolored. All of them when there are at most `budget`, otherwise
/// `budget` of them drawn by seeded randomized restarts. Deterministic per
/// seed.
ColoringSample enumerate_colorings(const Graph& g, Edge e, int k, std::size_t budget, std::uint64_t seed);

struct SamplingPolicy {
  std::size_t exhaustive_limit = 5000;
  std::size_t sample_size = 200;
  std::uint64_t seed = 0;
};

/// Exhaustive when g - e has at most policy.exhaustive_limit colorings,
/// otherwise a seeded sample of policy.sample_size. A sample_size of 0
/// yields nothing.
ColoringSample sample_colorings(const Graph& g, Edge e, int k, const SamplingPolicy& policy);

/// Calls `visit` on each proper k-coloring of g minus `skip` (edge-id
/// indexed colors, skip left at 0) in deterministic order until it returns
/// false. Returns the number visited.
std::size_t for_each_coloring(const Graph& g, std::optional<EdgeId> skip, int k,
                              const std::function<bool(std::span<const Color>)>& visit);

}  // namespace ecol

#endif  // ECOL_SOLVER_HPP
