#pragma once

#include <string>

#include "json.hpp"

#include "alphaham/applications.hpp"
#include "alphaham/embedding.hpp"
#include "alphaham/graph.hpp"
#include "alphaham/linkage.hpp"
#include "alphaham/path_cover.hpp"

namespace alphaham {
namespace certs {

using nlohmann::json;

json embedding_json(const TMEmbedding& emb);
json independent_set_json(const VertexSet& is);
json cover_json(const std::vector<Path>& cover, const std::optional<VertexSet>& is);
json infeasible_json();

struct VerifyResult {
    bool ok = false;
    std::string message;
};

struct VerifyArgs {
    int k = -1;                                       // for independence-size arithmetic
    std::optional<std::pair<int, int>> endpoints;     // hampath
    std::optional<TerminalPairs> pairs;               // linkage
    std::optional<VertexSet> terminals;               // tcycle
    const Graph* pattern = nullptr;                   // embed
    const ListAssignment* lists = nullptr;            // embed
};

/// Re-validates an emitted certificate against the instance: cover partition,
/// embedding validity (and spanning where the problem demands it),
/// independence and size arithmetic.
VerifyResult verify_certificate(const std::string& problem, const Graph& g, const json& cert, const VerifyArgs& args);

}  // namespace certs
}  // namespace alphaham
