#pragma once

#include <optional>
#include <variant>

#include "alphaham/embedding.hpp"
#include "alphaham/graph.hpp"

namespace alphaham {

/// Terminal pairs (s_i, t_i) with s_i != t_i; a vertex may repeat across pairs
/// before normalization.
struct TerminalPairs {
    std::vector<std::pair<int, int>> pairs;

    int l() const { return int(pairs.size()); }
};

/// Family of s_i t_i-paths, pairwise sharing no vertex except common pair
/// endpoints; no path contains another pair's terminal internally.
struct Linkage {
    std::vector<Path> paths;
    bool spanning = false;
};

struct LinkOutcome {
    enum class Tag { Linkage, IndependentSet };
    Tag tag;
    Linkage linkage;        // valid when tag == Linkage
    VertexSet independent;  // valid when tag == IndependentSet
};

struct TwinExpansion {
    Graph graph;
    TerminalPairs pairs;       // all 2l terminals distinct
    std::vector<int> orig_of;  // new vertex id -> original id
};

/// Replaces every terminal occurring in p > 1 pairs by p mutually adjacent
/// true twins, making all 2l terminals distinct.
TwinExpansion normalize_terminals(const Graph& g, const TerminalPairs& pairs);

/// Exhaustive search for a linkage with pairwise distinct terminals: the
/// literal edge-subset enumeration for small edge counts, a backtracking
/// search over vertex subsets otherwise (the two are equivalence-tested on
/// tiny graphs).
std::optional<Linkage> brute_force_linkage(const Graph& g, const TerminalPairs& pairs);

/// Forces the literal edge-subset enumeration (|E| <= 24); test oracle.
std::optional<Linkage> brute_force_linkage_edge_subsets(const Graph& g, const TerminalPairs& pairs);

/// Forces the backtracking search; equivalence-tested against the edge-subset
/// enumeration on tiny graphs.
std::optional<Linkage> brute_force_linkage_backtracking(const Graph& g, const TerminalPairs& pairs);

/// Disjoint paths or an independent set of size k in a 10l-connected graph:
/// brute force below the (k+2l)^k size gate, otherwise Ramsey extraction and
/// clique-routed Menger fans.
LinkOutcome disjoint_paths_or_is(const Graph& g, int k, const TerminalPairs& pairs);

struct SpanningStats {
    int enlargement_rounds = 0;
};

using SpanningOutcome = std::variant<TMEmbedding, VertexSet>;

/// Spanning Lemma: in a max{k+2,10}*(|V(H)|+|E(H)|)-connected graph, computes
/// a TM-embedding of h spanning all of g with the prescribed terminal
/// injection f, or an independent set of size k.
SpanningOutcome spanning_embedding_or_is(const Graph& h, const Graph& g, const std::vector<int>& f, int k,
                                         SpanningStats* stats = nullptr);

bool validate_linkage(const Graph& g, const Linkage& lk, const TerminalPairs& pairs, std::string* why = nullptr);

}  // namespace alphaham
