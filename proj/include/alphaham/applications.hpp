#pragma once

#include <optional>

#include "alphaham/linkage.hpp"
#include "alphaham/path_cover.hpp"
#include "alphaham/tm_embed.hpp"

namespace alphaham {

/// Decisive Hamiltonicity outcome. The list TM-embedding solver may return an
/// independent set instead of deciding; these wrappers re-run it with k+1,
/// k+2, ... until it decides (at k = alpha(G)+1 no independent set of size k
/// exists, so termination is guaranteed).
struct HamOutcome {
    bool exists = false;
    std::optional<TMEmbedding> embedding;  // spanning witness when exists
    int k_used = 0;
};

HamOutcome hamiltonian_path(const Graph& g, int k, std::optional<std::pair<int, int>> endpoints = std::nullopt,
                            const MergeLimits& limits = {});

HamOutcome hamiltonian_cycle(const Graph& g, int k, const MergeLimits& limits = {});

struct PathCoverOutcome {
    enum class Tag { Coverable, NotCoverable, IndependentSet };
    Tag tag;
    std::vector<Path> cover;  // minimum cover when Coverable
    VertexSet independent;
};

/// Coverable by at most p paths? Grid over j K1 + (i-j) K2 patterns for
/// ascending i; the first spanning hit is the minimum cover size.
PathCoverOutcome path_coverable(const Graph& g, int p, int k, const MergeLimits& limits = {});

/// Hamiltonian-l-linkage encoded as l disjoint copies of K2 with singleton
/// lists. The embedding branch is spanning exactly when the linkage exists.
EmbedOutcome linkage_embedding(const Graph& g, const TerminalPairs& pairs, int k, const MergeLimits& limits = {});

/// Extracts the per-pair paths from a model of l K2.
std::vector<Path> linkage_paths_from_model(const Graph& h, const TMEmbedding& emb);

struct TCycleOutcome {
    enum class Tag { Cycle, IndependentSet, Infeasible };
    Tag tag = Tag::Infeasible;
    std::optional<TMEmbedding> embedding;  // largest cycle through the terminals
    VertexSet independent;
};

/// Maximum-size cycle through all terminals: one solver run per cyclic
/// ordering of the terminals (rotations and reflections deduplicated); for
/// |T| < 3 the cycle pattern is padded with unconstrained vertices.
TCycleOutcome tcycle_max(const Graph& g, const VertexSet& terminals, int k, int jobs = 1,
                         const MergeLimits& limits = {});

/// Seeded generator: disjoint cliques plus random cross edges; the number of
/// cliques bounds the independence number.
Graph gen_instance(const std::vector<int>& clique_sizes, double cross_p, uint64_t seed);

}  // namespace alphaham
