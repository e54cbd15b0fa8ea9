#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "alphaham/embedding.hpp"
#include "alphaham/graph.hpp"

namespace alphaham {

/// Interaction pattern of a model with the separator S. Local vertex ids:
/// 0..s-1 are the vertices of S in ascending order, s..s+w-1 are the abstract
/// W slots. xi maps W slots to component indices, fw places the pattern
/// vertices.
struct CutDescriptor {
    int s = 0;
    int w = 0;
    Graph mw;             // on s + w local vertices
    std::vector<int> xi;  // per W slot, 0-based component index
    std::vector<int> fw;  // per pattern vertex, local id

    bool is_terminal(int local) const {
        for (int img : fw)
            if (img == local) return true;
        return false;
    }
};

struct EmbedOutcome {
    enum class Tag { Embedding, IndependentSet, Infeasible };
    Tag tag = Tag::Infeasible;
    std::optional<TMEmbedding> embedding;
    VertexSet independent;

    static EmbedOutcome infeasible() { return {}; }
};

struct MergeLimits {
    int64_t max_descriptors = 5'000'000;  // hard abort past this many emitted descriptors
    // W slots are abstract; with canonical labels, descriptors differing only
    // by a slot permutation are emitted once. Outcome-equivalent to the
    // labeled enumeration (tested), and exponentially smaller on symmetric
    // patterns.
    bool canonical_slot_labels = true;
};

struct MergeStats {
    int64_t descriptors = 0;
    int max_w = 0;
    int64_t spanning_calls = 0;
};

struct Alg2Stats {
    int iterations = 0;
    std::vector<int> separator_sizes;  // |S| at the start of each iteration
    MergeStats merge;
};

/// Streams the cut descriptors for the given separator and component list in
/// the fixed order: |W| ascending, then fw lexicographic, then xi
/// lexicographic, then M_W edge sets lexicographic. When prune_tau_infeasible
/// is set, tuples whose W slots cannot possibly receive an injective placement
/// (counting argument only) are dropped early; this removes only descriptors
/// that would fail the matching check anyway. The callback returns false to
/// stop the stream.
void enumerate_cut_descriptors(const Graph& h, const Graph& g, const VertexSet& s, const ListAssignment& l,
                               const std::vector<VertexSet>& components, bool prune_tau_infeasible,
                               const MergeLimits& limits, MergeStats* stats,
                               const std::function<bool(const CutDescriptor&)>& emit,
                               bool canonical_slot_labels = false);

/// Injective placement of the W slots into the components, respecting lists
/// and separator adjacencies, via maximum bipartite matching. Returns slot ->
/// host vertex, or nullopt when no W-saturating matching exists.
std::optional<std::vector<int>> tau_assignment(const CutDescriptor& d, const Graph& g, const VertexSet& s,
                                               const ListAssignment& l, const std::vector<VertexSet>& components);

/// Merging Lemma: every component of g - s must be max{k+2,10}*(3h+3s)-
/// connected (complete components qualify). Combines per-component spanning
/// solves across all cut descriptors into a maximum list TM-embedding, an
/// independent set of size k, or infeasible.
EmbedOutcome merge_solve(const Graph& g, const Graph& h, const ListAssignment& l, int k, const VertexSet& s,
                         const MergeLimits& limits = {}, MergeStats* stats = nullptr);

/// Iterative separator construction followed by merge_solve: grows S by
/// minimum separators of insufficiently connected components, exiting early
/// with an independent set when k components appear.
EmbedOutcome max_list_tm_embedding(const Graph& g, const Graph& h, const ListAssignment& l, int k,
                                   const MergeLimits& limits = {}, Alg2Stats* stats = nullptr);

/// Reference enumerator for tests: literal filter chain over all graphs on
/// S u W. Exponential; only usable on tiny fixtures.
std::vector<CutDescriptor> enumerate_cut_descriptors_naive(const Graph& h, const Graph& g, const VertexSet& s,
                                                           const ListAssignment& l,
                                                           const std::vector<VertexSet>& components, int max_w);

}  // namespace alphaham
