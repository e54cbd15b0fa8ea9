#pragma once

#include <cstdint>

#include "alphaham/graph.hpp"

namespace alphaham {

struct CliqueOrIS {
    enum class Tag { Clique, Independent };
    Tag tag;
    VertexSet members;
};

struct RamseyStats {
    int64_t inspections = 0;  // vertices scanned across all recursion levels
    int depth = 0;
};

/// Binomial coefficient via the Pascal recurrence, overflow-checked; rejects
/// arguments beyond n = 64.
uint64_t binomial(int n, int k);

/// Constructive Erdos-Szekeres extraction: given |V(G)| >= binom(r+s-2, r-1),
/// returns an independent set of size r or a clique of size s. The pivot at
/// each level is the lowest vertex id; when both branches qualify, the
/// neighborhood branch is taken.
CliqueOrIS ramsey_extract(const Graph& g, int r, int s, RamseyStats* stats = nullptr);

}  // namespace alphaham
