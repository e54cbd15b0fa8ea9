#pragma once

#include <optional>

#include "alphaham/graph.hpp"
#include "alphaham/tm_embed.hpp"

namespace alphaham {

/// Path cover under transformation: vertex-disjoint directioned paths whose
/// union is V(G). A path is special when its endpoints coincide or are
/// adjacent; usual otherwise.
struct CoverState {
    std::vector<Path> paths;
};

bool path_is_special(const Graph& g, const Path& p);

struct ReductionOutcome {
    enum class Tag { Reduced, Sub1, Sub2, Irreducible };
    Tag tag = Tag::Irreducible;
    CoverState state;        // Reduced: transformed; Irreducible: unchanged
    VertexSet independent;   // Sub1/Sub2: exactly |paths| + k vertices
};

/// Applies the first applicable rule in the fixed order RR1, Sub1, RR2, RR3,
/// Sub2, RR4; Irreducible when none applies.
ReductionOutcome apply_reductions(const Graph& g, const CoverState& st, int k);

/// Exhaustive endpoint merging from the trivial cover (RR1 only); the result
/// has no edge between endpoints of distinct paths, hence at most alpha(G)
/// paths.
std::vector<Path> gallai_milgram_cover(const Graph& g);

/// Marks at most 2|S| cliques per separator vertex; unmarked cliques may be
/// covered by degenerate paths in some minimum cover. Cliques must be pairwise
/// disjoint clique components of g - s.
std::vector<int> selected_cliques(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& cliques);

struct BelowGMOutcome {
    std::vector<Path> cover;
    std::optional<VertexSet> independent;  // when present: exactly |cover| + k, independent
};

/// Minimum path cover or an independence certificate, given a small cover:
/// runs the j K1 + (i-j) K2 spanning grid through the list TM-embedding
/// solver with parameter |cover| + k.
BelowGMOutcome solve_small_cover(const Graph& g, int k, const std::vector<Path>& cover,
                                 const MergeLimits& limits = {});

/// Full driver: trivial cover, exhaustive reductions, connector separator,
/// irrelevant-clique removal, small-cover solve, certificate fixup.
BelowGMOutcome below_gm(const Graph& g, int k, const MergeLimits& limits = {});

bool validate_cover(const Graph& g, const std::vector<Path>& paths, std::string* why = nullptr);

}  // namespace alphaham
