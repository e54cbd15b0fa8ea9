#include "alphaham/applications.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

namespace alphaham {

namespace {

EmbedOutcome solve_escalating(const Graph& g, const Graph& h, const ListAssignment& l, int k,
                              const MergeLimits& limits, int* k_used) {
    for (int kk = std::max(1, k);; ++kk) {
        EmbedOutcome out = max_list_tm_embedding(g, h, l, kk, limits);
        if (k_used) *k_used = kk;
        if (out.tag != EmbedOutcome::Tag::IndependentSet) return out;
        if (kk > g.n()) throw StructureError("independent set larger than the graph");
    }
}

}  // namespace

HamOutcome hamiltonian_path(const Graph& g, int k, std::optional<std::pair<int, int>> endpoints,
                            const MergeLimits& limits) {
    HamOutcome out;
    out.k_used = k;
    if (g.n() == 0) return out;
    if (g.n() == 1) {
        if (endpoints && (endpoints->first != 0 || endpoints->second != 0)) return out;
        out.exists = true;
        out.embedding = TMEmbedding{Subgraph{{0}, {}}, {}};
        return out;
    }
    Graph h(2, {{0, 1}});
    ListAssignment lists = trivial_lists(h, g);
    if (endpoints) {
        g.check_vertex(endpoints->first);
        g.check_vertex(endpoints->second);
        if (endpoints->first == endpoints->second) return out;
        lists[0] = {endpoints->first};
        lists[1] = {endpoints->second};
    }
    EmbedOutcome eo = solve_escalating(g, h, lists, k, limits, &out.k_used);
    if (eo.tag == EmbedOutcome::Tag::Embedding && int(eo.embedding->size()) == g.n()) {
        out.exists = true;
        out.embedding = std::move(eo.embedding);
    }
    return out;
}

HamOutcome hamiltonian_cycle(const Graph& g, int k, const MergeLimits& limits) {
    HamOutcome out;
    out.k_used = k;
    if (g.n() < 3) return out;
    Graph h(3, {{0, 1}, {0, 2}, {1, 2}});
    ListAssignment lists = trivial_lists(h, g);
    EmbedOutcome eo = solve_escalating(g, h, lists, k, limits, &out.k_used);
    if (eo.tag == EmbedOutcome::Tag::Embedding && int(eo.embedding->size()) == g.n()) {
        out.exists = true;
        out.embedding = std::move(eo.embedding);
    }
    return out;
}

PathCoverOutcome path_coverable(const Graph& g, int p, int k, const MergeLimits& limits) {
    if (p < 1) throw PreconditionError("p must be >= 1");
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (g.n() == 0) return {PathCoverOutcome::Tag::Coverable, {}, {}};
    if (g.edge_count() == 0) {
        if (g.n() <= p) {
            std::vector<Path> cover;
            for (int v = 0; v < g.n(); ++v) cover.push_back(Path{{v}});
            return {PathCoverOutcome::Tag::Coverable, std::move(cover), {}};
        }
        return {PathCoverOutcome::Tag::NotCoverable, {}, {}};
    }
    for (int i = 1; i <= std::min(p, g.n() - 1); ++i) {
        for (int j = 0; j <= i - 1; ++j) {
            GraphBuilder hb(j + 2 * (i - j));
            for (int e = 0; e < i - j; ++e) hb.add_edge(j + 2 * e, j + 2 * e + 1);
            Graph hij = hb.build();
            EmbedOutcome out = max_list_tm_embedding(g, hij, trivial_lists(hij, g), k, limits);
            if (out.tag == EmbedOutcome::Tag::IndependentSet)
                return {PathCoverOutcome::Tag::IndependentSet, {}, std::move(out.independent)};
            if (out.tag == EmbedOutcome::Tag::Embedding && int(out.embedding->size()) == g.n()) {
                std::vector<Path> cover;
                // Reuse the model-to-cover traversal used by the small-cover solver.
                std::map<int, std::vector<int>> adj;
                for (int v : out.embedding->model.vertices) adj[v];
                for (auto [u, v] : out.embedding->model.edges) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
                for (int hv = 0; hv < hij.n(); ++hv) {
                    if (hij.degree(hv) == 0) {
                        cover.push_back(Path{{out.embedding->f[hv]}});
                    } else if (hv < hij.neighbors(hv)[0]) {
                        int goal = out.embedding->f[hij.neighbors(hv)[0]];
                        std::vector<int> seq{out.embedding->f[hv]};
                        int prev = -1, cur = seq[0];
                        while (cur != goal) {
                            int nxt = -1;
                            for (int cand : adj[cur])
                                if (cand != prev) nxt = cand;
                            prev = cur;
                            cur = nxt;
                            seq.push_back(cur);
                        }
                        cover.push_back(Path{seq});
                    }
                }
                return {PathCoverOutcome::Tag::Coverable, std::move(cover), {}};
            }
        }
    }
    return {PathCoverOutcome::Tag::NotCoverable, {}, {}};
}

EmbedOutcome linkage_embedding(const Graph& g, const TerminalPairs& pairs, int k, const MergeLimits& limits) {
    if (pairs.l() < 1) throw PreconditionError("need at least one pair");
    for (auto [s, t] : pairs.pairs) {
        g.check_vertex(s);
        g.check_vertex(t);
        if (s == t) throw DegeneratePair("terminal pair with s = t");
    }
    int l = pairs.l();
    GraphBuilder hb(2 * l);
    for (int i = 0; i < l; ++i) hb.add_edge(2 * i, 2 * i + 1);
    Graph h = hb.build();
    ListAssignment lists(2 * l);
    for (int i = 0; i < l; ++i) {
        lists[2 * i] = {pairs.pairs[i].first};
        lists[2 * i + 1] = {pairs.pairs[i].second};
    }
    return max_list_tm_embedding(g, h, lists, k, limits);
}

std::vector<Path> linkage_paths_from_model(const Graph& h, const TMEmbedding& emb) {
    std::map<int, std::vector<int>> adj;
    for (int v : emb.model.vertices) adj[v];
    for (auto [u, v] : emb.model.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Path> paths;
    for (int hv = 0; hv < h.n(); ++hv) {
        if (h.degree(hv) == 0 || hv > h.neighbors(hv)[0]) continue;
        int goal = emb.f[h.neighbors(hv)[0]];
        std::vector<int> seq{emb.f[hv]};
        int prev = -1, cur = seq[0];
        while (cur != goal) {
            int nxt = -1;
            for (int cand : adj[cur])
                if (cand != prev) nxt = cand;
            prev = cur;
            cur = nxt;
            seq.push_back(cur);
        }
        paths.push_back(Path{seq});
    }
    return paths;
}

TCycleOutcome tcycle_max(const Graph& g, const VertexSet& terminals, int k, int jobs, const MergeLimits& limits) {
    validate_vertex_set(g, terminals);
    if (terminals.empty()) throw PreconditionError("need at least one terminal");
    if (k < 1) throw PreconditionError("k must be >= 1");
    VertexSet ts = terminals;
    std::sort(ts.begin(), ts.end());
    int q = int(ts.size());

    // Cycle patterns need three vertices; smaller terminal sets are padded
    // with list-unconstrained cycle vertices.
    int cyc = std::max(q, 3);
    GraphBuilder hb(cyc);
    for (int i = 0; i < cyc; ++i) hb.add_edge(i, (i + 1) % cyc);
    Graph h = hb.build();

    // Cyclic orderings up to rotation and reflection: first terminal fixed,
    // reflections removed by requiring the second entry below the last.
    std::vector<std::vector<int>> orderings;
    std::vector<int> rest(ts.begin() + 1, ts.end());
    std::sort(rest.begin(), rest.end());
    do {
        if (q >= 3 && rest.front() > rest.back()) continue;
        std::vector<int> ord{ts[0]};
        ord.insert(ord.end(), rest.begin(), rest.end());
        orderings.push_back(std::move(ord));
    } while (std::next_permutation(rest.begin(), rest.end()));

    VertexSet all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;

    struct PerOrdering {
        std::optional<EmbedOutcome> out;
        std::exception_ptr err;
    };
    std::vector<PerOrdering> results(orderings.size());
    auto solve_one = [&](size_t oi) {
        try {
            ListAssignment lists(cyc, all);
            for (int i = 0; i < q; ++i) lists[i] = {orderings[oi][i]};
            results[oi].out = max_list_tm_embedding(g, h, lists, k, limits);
        } catch (...) {
            results[oi].err = std::current_exception();
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1 || orderings.size() <= 1) {
        for (size_t oi = 0; oi < orderings.size(); ++oi) solve_one(oi);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < std::min<int>(jobs, int(orderings.size())); ++w)
            pool.emplace_back([&] {
                for (size_t oi = next.fetch_add(1); oi < orderings.size(); oi = next.fetch_add(1)) solve_one(oi);
            });
        for (auto& th : pool) th.join();
    }

    TCycleOutcome best;
    for (size_t oi = 0; oi < orderings.size(); ++oi) {
        if (results[oi].err) std::rethrow_exception(results[oi].err);
        EmbedOutcome& out = *results[oi].out;
        if (out.tag == EmbedOutcome::Tag::IndependentSet) {
            best.tag = TCycleOutcome::Tag::IndependentSet;
            best.independent = std::move(out.independent);
            best.embedding.reset();
            return best;
        }
        if (out.tag == EmbedOutcome::Tag::Embedding) {
            if (best.tag != TCycleOutcome::Tag::Cycle || out.embedding->size() > best.embedding->size()) {
                best.tag = TCycleOutcome::Tag::Cycle;
                best.embedding = std::move(out.embedding);
            }
        }
    }
    return best;
}

Graph gen_instance(const std::vector<int>& clique_sizes, double cross_p, uint64_t seed) {
    if (clique_sizes.empty()) throw PreconditionError("need at least one clique");
    int n = 0;
    for (int c : clique_sizes) {
        if (c < 1) throw PreconditionError("clique sizes must be >= 1");
        n += c;
    }
    std::vector<int> part;
    for (size_t i = 0; i < clique_sizes.size(); ++i)
        for (int j = 0; j < clique_sizes[i]; ++j) part.push_back(int(i));

    std::mt19937_64 rng(seed);
    auto coin = [&]() { return double(rng() >> 11) * (1.0 / 9007199254740992.0); };

    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (part[u] == part[v])
                b.add_edge(u, v);
            else if (coin() < cross_p)
                b.add_edge(u, v);
        }
    return b.build();
}

}  // namespace alphaham
