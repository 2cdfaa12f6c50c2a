#ifndef ECOL_OVERFULL_HPP
#define ECOL_OVERFULL_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecol/graph.hpp"

namespace ecol {

/// |E(g)| > delta_ref * floor(n/2). delta_ref defaults to Δ(g); passing the
/// host's Δ tests a subgraph against it. Throws std::invalid_argument when
/// delta_ref < Δ(g).
bool is_overfull(const Graph& g, std::optional<int> delta_ref = std::nullopt);

/// Σ_v (delta_ref - d(v)). For odd-order g, overfull w.r.t. delta_ref iff
/// the deficiency is below delta_ref.
long deficiency(const Graph& g, std::optional<int> delta_ref = std::nullopt);

inline constexpr int kDefaultSubgraphCap = 20;

class SearchRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every odd vertex set S with Δ(g[S]) = Δ(g) and g[S] overfull w.r.t. Δ(g),
/// sorted lexicographically. Branch-and-bound over include/exclude decisions
/// in vertex order; a partial set is cut once the deficiency its members are
/// already committed to reaches Δ(g). Throws SearchRefused when n > cap.
std::vector<std::vector<Vertex>> find_overfull_subgraphs(const Graph& g, int cap = kDefaultSubgraphCap);

}  // namespace ecol

#endif  // ECOL_OVERFULL_HPP
