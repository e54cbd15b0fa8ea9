#pragma once

#include <map>
#include <optional>

#include "alphaham/embedding.hpp"
#include "alphaham/graph.hpp"

namespace alphaham {
namespace oracles {

struct Caps {
    int alpha = 24;
    int pc = 12;
    int ham = 14;
    int embed = 9;
};

/// Compile-time defaults, overridable via ALPHAHAM_ORACLE_CAP (sets all four).
Caps caps();

struct AlphaResult {
    int alpha;
    VertexSet witness;
};
AlphaResult brute_alpha(const Graph& g);

struct PcResult {
    int pc;
    std::vector<Path> witness;
};
PcResult brute_pc(const Graph& g);

enum class HamMode { Path, Cycle };
struct HamResult {
    bool exists;
    std::optional<Path> witness;  // for cycles, a closed traversal without the repeated endpoint
};
HamResult brute_ham(const Graph& g, HamMode mode, std::optional<std::pair<int, int>> endpoints = std::nullopt);

struct MaxEmbeddingResult {
    bool feasible;
    int size = 0;
    std::optional<TMEmbedding> witness;
};
/// Exhaustive maximum list TM-embedding over all injections and internally
/// disjoint path systems.
MaxEmbeddingResult brute_max_embedding(const Graph& h, const Graph& g, const ListAssignment& l);

namespace ref {
// Second, independent methods for the dual-oracle agreement suite.
int alpha_by_subsets(const Graph& g);
int pc_by_partition_search(const Graph& g);
bool ham_by_permutations(const Graph& g, HamMode mode, std::optional<std::pair<int, int>> endpoints = std::nullopt);
int max_embedding_by_edge_subsets(const Graph& h, const Graph& g, const ListAssignment& l);  // -1 if infeasible
}  // namespace ref

}  // namespace oracles
}  // namespace alphaham
