#pragma once

// Test-side graph universes: non-isomorphic graph generation for small n
// (extension + WL-bucketed isomorphism dedup) and seeded random graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>
#include <vector>

#include "alphaham/graph.hpp"

namespace testsupport {

using alphaham::Edge;
using alphaham::Graph;
using alphaham::GraphBuilder;

inline uint64_t wl_hash(const Graph& g) {
    std::vector<uint64_t> color(g.n());
    for (int v = 0; v < g.n(); ++v) color[v] = uint64_t(g.degree(v)) + 1;
    for (int round = 0; round < 3; ++round) {
        std::vector<uint64_t> next(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<uint64_t> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            uint64_t h = color[v] * 1000003ULL + 7;
            for (uint64_t c : nb) h = h * 1099511628211ULL + c;
            next[v] = h;
        }
        color = next;
    }
    std::sort(color.begin(), color.end());
    uint64_t h = uint64_t(g.n()) * 31 + uint64_t(g.edge_count());
    for (uint64_t c : color) h = h * 1099511628211ULL + c;
    return h;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    int n = a.n();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) da[v] = a.degree(v), db[v] = b.degree(v);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int v) {
        if (v == n) return true;
        for (int u = 0; u < n; ++u) {
            if (used[u] || da[v] != db[u]) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                if (a.adjacent(v, w) != b.adjacent(map[w], u)) ok = false;
            if (!ok) continue;
            used[u] = 1;
            map[v] = u;
            if (rec(v + 1)) return true;
            used[u] = 0;
            map[v] = -1;
        }
        return false;
    };
    return rec(0);
}

/// All graphs on n vertices up to isomorphism, by vertex extension.
inline const std::vector<Graph>& all_graphs_upto_iso(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 0) return cache[0] = {Graph(0)};
    if (n == 1) return cache[1] = {Graph(1)};

    const std::vector<Graph>& prev = all_graphs_upto_iso(n - 1);
    std::unordered_map<uint64_t, std::vector<Graph>> buckets;
    std::vector<Graph> out;
    for (const Graph& p : prev) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << (n - 1)); ++mask) {
            GraphBuilder b(n);
            for (auto [u, v] : p.edges()) b.add_edge(u, v);
            for (int u = 0; u < n - 1; ++u)
                if ((mask >> u) & 1) b.add_edge(u, n - 1);
            Graph cand = b.build();
            uint64_t h = wl_hash(cand);
            auto& bucket = buckets[h];
            bool fresh = true;
            for (const Graph& seen : bucket)
                if (are_isomorphic(seen, cand)) {
                    fresh = false;
                    break;
                }
            if (fresh) {
                bucket.push_back(cand);
                out.push_back(std::move(cand));
            }
        }
    }
    return cache[n] = std::move(out);
}

inline std::vector<Graph> connected_graphs_upto_iso(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs_upto_iso(n))
        if (alphaham::is_connected(g)) out.push_back(g);
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    GraphBuilder b(n);
    auto coin = [&]() { return double(rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin() < p) b.add_edge(u, v);
    return b.build();
}

}  // namespace testsupport
