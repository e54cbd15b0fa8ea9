#pragma once

#include <optional>
#include <string>

#include "alphaham/graph.hpp"

namespace alphaham {

/// Topological-minor embedding: model subgraph of the host plus the injective
/// image of each pattern vertex. Every model vertex outside the image has
/// degree exactly 2, and dissolving those vertices recovers the pattern.
struct TMEmbedding {
    Subgraph model;      // host ids
    std::vector<int> f;  // pattern vertex h -> host id

    size_t size() const { return model.vertices.size(); }
};

using ListAssignment = std::vector<VertexSet>;  // per pattern vertex, allowed host images

ListAssignment trivial_lists(const Graph& h, const Graph& g);

struct ValidationReport {
    bool ok = true;
    std::string diagnostic;  // names the first violated condition
};

/// Full structural check of (M, f) as a TM-embedding of h in g: model is a
/// subgraph of g, f is injective into the model and respects the lists when
/// given, non-terminals have degree 2, and the dissolved model is isomorphic
/// to h under f.
ValidationReport validate_tm_embedding(const Graph& h, const Graph& g, const Subgraph& m, const std::vector<int>& f,
                                       const ListAssignment* l = nullptr);

bool embedding_spans(const Graph& g, const TMEmbedding& emb);

}  // namespace alphaham
