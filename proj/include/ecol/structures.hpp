#ifndef ECOL_STRUCTURES_HPP
#define ECOL_STRUCTURES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecol/coloring.hpp"

namespace ecol {

/// (v0, e1, v1, ..., ep, vp). For a multi-fan v0 is the center x; for a
/// Kierstead path v0 = y0.
struct Sequence {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// First failed defining condition: "F1"/"F2" for fans, "K1"/"K2" for
/// Kierstead paths; index is the 1-based edge index it concerns.
struct Violation {
  std::string condition;
  std::size_t index = 0;
  std::string detail;
};

/// Sequence plus, for each edge i >= 2, the earlier vertex index j whose
/// missing set holds the color of e_i (-1 for e_1).
struct MultiFan {
  Sequence seq;
  std::vector<int> witness;

  Vertex center() const { return seq.vertices.front(); }
  /// y_1..y_p.
  std::vector<Vertex> leaves() const { return {seq.vertices.begin() + 1, seq.vertices.end()}; }
};

struct KiersteadPath {
  Sequence seq;
  std::vector<int> witness;
};

std::optional<Violation> validate_multifan(const PartialColoring& c, const Sequence& seq);
std::optional<Violation> validate_kierstead_path(const PartialColoring& c, const Sequence& seq);

/// Greedy closure at x: keep appending the lowest-labeled unused neighbor y
/// whose edge color is missing at some vertex already in the fan. Throws
/// std::invalid_argument if the uncolored edge is not at x.
MultiFan maximal_multifan(const PartialColoring& c, Vertex x);

/// All Kierstead paths with min_edges..max_edges edges, both orientations of
/// the uncolored edge, depth-first in increasing vertex order.
void for_each_kierstead_path(const PartialColoring& c, std::size_t min_edges, std::size_t max_edges,
                             const std::function<void(const KiersteadPath&)>& visit);
std::vector<KiersteadPath> find_kierstead_paths(const PartialColoring& c, std::size_t max_edges);

/// Fork on a,b,u,s1,s2,t1,t2 around the uncolored edge ab. The labels carry
/// the roles; s1 < s2 fixes the 1/2 symmetry.
struct ForkConfig {
  Vertex a, b, u, s1, s2, t1, t2;
  Color bu, us1, us2, s1t1, s2t2;
};

/// Long form shares the fork shape; the short form uses a,b,u,x,y with
/// edges ab,bu,ux,uy (x < y) and stores them in s1/s2, leaving t1/t2 at -1.
struct BranchConfig {
  bool short_form = false;
  Vertex a, b, u, s1, s2, t1 = -1, t2 = -1;
  Color bu, us1, us2, s1t1 = kNoColor, s2t2 = kNoColor;

  Vertex x() const { return s1; }
  Vertex y() const { return s2; }
};

/// Both orientations (a, b) of the uncolored edge. Deterministic order.
std::vector<ForkConfig> find_forks(const PartialColoring& c);
/// Long form additionally requires φ(s1t1) = φ(s2t2); the short form needs
/// φ̄(x) and φ̄(y) to each meet φ̄(a) ∪ φ̄(b).
std::vector<BranchConfig> find_branches(const PartialColoring& c, bool short_form);

/// The two Kierstead paths a branch is made of.
std::pair<Sequence, Sequence> branch_paths(const BranchConfig& br);

bool is_fork(const PartialColoring& c, const ForkConfig& f);
bool is_branch(const PartialColoring& c, const BranchConfig& br);

std::string format_sequence(const PartialColoring& c, const Sequence& seq, std::string_view tag);
std::string format_multifan(const PartialColoring& c, const MultiFan& f);
std::string format_kierstead(const PartialColoring& c, const KiersteadPath& k);
std::string format_fork(const ForkConfig& f);
std::string format_branch(const BranchConfig& b);

/// Parses the vertex tuple of a serialized configuration back.
Sequence parse_sequence(std::string_view text);
ForkConfig parse_fork(const PartialColoring& c, std::string_view text);
BranchConfig parse_branch(const PartialColoring& c, std::string_view text);

}  // namespace ecol

#endif  // ECOL_STRUCTURES_HPP
