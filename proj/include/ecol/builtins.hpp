#ifndef ECOL_BUILTINS_HPP
#define ECOL_BUILTINS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecol/graph.hpp"

namespace ecol {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
/// Petersen graph with vertex 0 deleted, relabeled 0..8.
Graph petersen_minus_vertex();

/// Named graphs: "petersen", "petersen_minus_vertex", and the families
/// "K<n>", "C<n>", "P<n>", "star<k>", "K<a>,<b>".
std::optional<Graph> named_graph(std::string_view key);
std::vector<std::string> named_graph_keys();

}  // namespace ecol

#endif  // ECOL_BUILTINS_HPP
