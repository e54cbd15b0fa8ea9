#pragma once

#include <optional>

#include "alphaham/graph.hpp"

namespace alphaham {

/// Result of an exact vertex-connectivity computation. The separator is absent
/// exactly when the graph is complete (convention: kappa = n-1 then, 0 for K1).
struct SeparatorResult {
    int kappa = 0;
    std::optional<VertexSet> separator;
};

/// Internally disjoint paths from a common center into a target set; no vertex
/// other than the center appears in two paths, endpoints are distinct target
/// vertices and internal vertices avoid the target set.
struct PathFan {
    int center = -1;
    std::vector<Path> paths;
};

SeparatorResult vertex_connectivity(const Graph& g);

/// True iff c_v(g) >= c (complete graphs have c_v = n-1). When false and the
/// graph is not complete, carries a minimum separator as witness.
std::pair<bool, std::optional<VertexSet>> is_c_connected(const Graph& g, int c);

/// Connectivity requirement check used by the algorithms: complete graphs have
/// no vertex cut at all and therefore satisfy every requirement.
bool meets_connectivity(const Graph& g, int c);

PathFan menger_fan(const Graph& g, int x, const VertexSet& s, int cap);

/// A fan restricted to end only in `s`, computed in g minus `forbidden`.
PathFan menger_fan_avoiding(const Graph& g, int x, const VertexSet& s, int cap, const VertexSet& forbidden);

/// 2l internally disjoint paths, the i-th from terminals[i] to a distinct
/// vertex of the clique c, internal vertices avoiding terminals and c. Trivial
/// paths when terminals[i] lies in c. Throws FlowDeficit when no such family
/// exists (violated precondition).
std::vector<Path> terminal_to_clique_paths(const Graph& g, const std::vector<int>& terminals, const VertexSet& c);

bool validate_fan(const Graph& g, const PathFan& fan, const VertexSet& s, std::string* why = nullptr);

}  // namespace alphaham
