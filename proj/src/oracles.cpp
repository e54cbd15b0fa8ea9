#include "alphaham/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace alphaham {
namespace oracles {

Caps caps() {
    Caps c;
    if (const char* env = std::getenv("ALPHAHAM_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) c = Caps{v, v, v, v};
    }
    return c;
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw SizeCap(std::string(what) + " oracle capped at n <= " + std::to_string(cap) + ", got n = " +
                      std::to_string(g.n()));
}

struct AlphaSearch {
    const Graph& g;
    VertexSet best, chosen;

    void rec(std::vector<int>& cands) {
        if (chosen.size() + cands.size() <= best.size()) return;
        if (cands.empty()) {
            best = chosen;
            return;
        }
        int v = cands.front();
        std::vector<int> take;
        for (int u : cands)
            if (u != v && !g.adjacent(u, v)) take.push_back(u);
        chosen.push_back(v);
        rec(take);
        chosen.pop_back();
        std::vector<int> skip(cands.begin() + 1, cands.end());
        rec(skip);
    }
};

}  // namespace

AlphaResult brute_alpha(const Graph& g) {
    check_cap(g, caps().alpha, "alpha");
    AlphaSearch s{g, {}, {}};
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    s.rec(all);
    return {int(s.best.size()), s.best};
}

PcResult brute_pc(const Graph& g) {
    check_cap(g, caps().pc, "path cover");
    int n = g.n();
    if (n == 0) return {0, {}};
    int full = (1 << n) - 1;
    const int8_t INF = 127;
    // dp[mask][v]: fewest paths partitioning mask, the last one open at v.
    // parent encoding: -2 seed, v' extend from v', -(v'+3) new path after v'.
    std::vector<int8_t> dp(size_t(full + 1) * n, INF);
    std::vector<int16_t> par(size_t(full + 1) * n, -1);
    auto idx = [n](int mask, int v) { return size_t(mask) * n + v; };
    for (int v = 0; v < n; ++v) {
        dp[idx(1 << v, v)] = 1;
        par[idx(1 << v, v)] = -2;
    }
    for (int mask = 1; mask <= full; ++mask) {
        for (int v = 0; v < n; ++v) {
            int8_t cur = dp[idx(mask, v)];
            if (cur == INF) continue;
            for (int u = 0; u < n; ++u) {
                if (mask & (1 << u)) continue;
                int nm = mask | (1 << u);
                if (g.adjacent(u, v) && cur < dp[idx(nm, u)]) {
                    dp[idx(nm, u)] = cur;
                    par[idx(nm, u)] = int16_t(v);
                }
                if (int8_t(cur + 1) < dp[idx(nm, u)]) {
                    dp[idx(nm, u)] = int8_t(cur + 1);
                    par[idx(nm, u)] = int16_t(-(v + 3));
                }
            }
        }
    }
    int best_v = 0;
    for (int v = 1; v < n; ++v)
        if (dp[idx(full, v)] < dp[idx(full, best_v)]) best_v = v;

    std::vector<Path> paths;
    std::vector<int> cur;
    int mask = full, v = best_v;
    while (true) {
        cur.push_back(v);
        int16_t p = par[idx(mask, v)];
        mask ^= (1 << v);
        if (p == -2) {
            std::reverse(cur.begin(), cur.end());
            paths.push_back(Path{cur});
            break;
        }
        if (p <= -3) {
            std::reverse(cur.begin(), cur.end());
            paths.push_back(Path{cur});
            cur.clear();
            v = -(p + 3);
        } else {
            v = p;
        }
    }
    std::reverse(paths.begin(), paths.end());
    return {int(dp[idx(full, best_v)]), std::move(paths)};
}

HamResult brute_ham(const Graph& g, HamMode mode, std::optional<std::pair<int, int>> endpoints) {
    check_cap(g, caps().ham, "hamiltonicity");
    int n = g.n();
    if (n == 0) return {false, std::nullopt};
    if (n == 1) {
        if (mode == HamMode::Cycle) return {false, std::nullopt};
        if (endpoints && (endpoints->first != 0 || endpoints->second != 0)) return {false, std::nullopt};
        return {true, Path{{0}}};
    }
    if (mode == HamMode::Cycle && n < 3) return {false, std::nullopt};
    if (endpoints) {
        g.check_vertex(endpoints->first);
        g.check_vertex(endpoints->second);
        if (endpoints->first == endpoints->second) return {false, std::nullopt};
    }

    int full = (1 << n) - 1;
    std::vector<int8_t> par(size_t(full + 1) * n, -1);
    auto idx = [n](int mask, int v) { return size_t(mask) * n + v; };
    auto seed = [&](int v) { par[idx(1 << v, v)] = int8_t(v); };
    if (mode == HamMode::Cycle)
        seed(0);
    else if (endpoints)
        seed(endpoints->first);
    else
        for (int v = 0; v < n; ++v) seed(v);

    for (int mask = 1; mask <= full; ++mask)
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1 << v)) || par[idx(mask, v)] < 0) continue;
            for (int u : g.neighbors(v)) {
                if (mask & (1 << u)) continue;
                if (par[idx(mask | (1 << u), u)] < 0) par[idx(mask | (1 << u), u)] = int8_t(v);
            }
        }

    auto reconstruct = [&](int last) {
        std::vector<int> seq;
        int mask = full, v = last;
        while (true) {
            seq.push_back(v);
            int p = par[idx(mask, v)];
            mask ^= (1 << v);
            if (p == v) break;
            v = p;
        }
        std::reverse(seq.begin(), seq.end());
        return Path{seq};
    };

    if (mode == HamMode::Cycle) {
        for (int v = 1; v < n; ++v)
            if (par[idx(full, v)] >= 0 && g.adjacent(v, 0)) return {true, reconstruct(v)};
        return {false, std::nullopt};
    }
    if (endpoints) {
        int t = endpoints->second;
        if (par[idx(full, t)] >= 0) return {true, reconstruct(t)};
        return {false, std::nullopt};
    }
    for (int v = 0; v < n; ++v)
        if (par[idx(full, v)] >= 0) return {true, reconstruct(v)};
    return {false, std::nullopt};
}

namespace {

// Exhaustive-with-memoization search over internally disjoint path systems for
// a fixed injection. Pattern edges are routed in canonical order; a state is
// (edge index, current path end, used-vertex mask). All reachable final masks
// are produced, so the maximum coverage is exact.
struct EmbedSearch {
    using State = std::tuple<int, int, uint32_t>;  // e, v, mask; e == #edges and v == -1 means done

    const Graph& g;
    const std::vector<Edge>& hedges;
    const std::vector<int>& f;
    uint32_t image_mask;

    std::map<State, State> parent;
    std::vector<State> finals;

    void run(uint32_t start_mask) {
        std::vector<State> queue;
        auto push = [&](State st, State par) {
            if (parent.count(st)) return;
            parent[st] = par;
            queue.push_back(st);
            if (std::get<1>(st) == -1) finals.push_back(st);
        };
        if (hedges.empty()) {
            push({0, -1, start_mask}, {-1, -1, 0});
            return;
        }
        int x0 = f[hedges[0].first];
        push({0, x0, start_mask | (uint32_t(1) << x0)}, {-1, -1, 0});
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [e, v, mask] = queue[qi];
            if (v == -1) continue;
            int target = f[hedges[e].second];
            if (g.adjacent(v, target)) {
                uint32_t nm = mask | (uint32_t(1) << target);
                if (e + 1 == int(hedges.size())) {
                    push({e + 1, -1, nm}, {e, v, mask});
                } else {
                    int x = f[hedges[e + 1].first];
                    push({e + 1, x, nm | (uint32_t(1) << x)}, {e, v, mask});
                }
            }
            for (int u : g.neighbors(v)) {
                if (mask & (uint32_t(1) << u)) continue;
                if (image_mask & (uint32_t(1) << u)) continue;
                push({e, u, mask | (uint32_t(1) << u)}, {e, v, mask});
            }
        }
    }

    std::vector<Edge> model_edges(State fin) const {
        std::vector<Edge> edges;
        State cur = fin;
        while (true) {
            State par = parent.at(cur);
            auto [pe, pv, pm] = par;
            if (pe < 0) break;
            auto [ce, cv, cm] = cur;
            int to;
            if (ce == pe)
                to = cv;  // internal extension pv -> cv
            else
                to = f[hedges[pe].second];  // pv finished edge pe at its target
            edges.emplace_back(std::min(pv, to), std::max(pv, to));
            cur = par;
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    }
};

}  // namespace

MaxEmbeddingResult brute_max_embedding(const Graph& h, const Graph& g, const ListAssignment& l) {
    check_cap(g, std::max(caps().embed, 9), "embedding");
    if (h.n() > 4) throw SizeCap("embedding oracle capped at |V(H)| <= 4");
    if (int(l.size()) != h.n()) throw PreconditionError("list assignment size mismatch");
    if (g.n() > 31) throw SizeCap("embedding oracle mask limit");

    auto hedges = h.edges();
    std::vector<char> isolated(h.n(), 1);
    for (auto [a, b] : hedges) isolated[a] = isolated[b] = 0;

    MaxEmbeddingResult out{false, 0, std::nullopt};
    std::vector<int> f(h.n(), -1);
    std::vector<char> used(g.n(), 0);

    std::function<void(int)> inject = [&](int hv) {
        if (out.feasible && out.size == g.n()) return;
        if (hv == h.n()) {
            uint32_t start = 0, image_mask = 0;
            for (int i = 0; i < h.n(); ++i) {
                image_mask |= uint32_t(1) << f[i];
                if (isolated[i]) start |= uint32_t(1) << f[i];
            }
            EmbedSearch search{g, hedges, f, image_mask, {}, {}};
            search.run(start);
            for (auto fin : search.finals) {
                uint32_t fm = std::get<2>(fin);
                int sz = __builtin_popcount(fm);
                if (!out.feasible || sz > out.size) {
                    out.feasible = true;
                    out.size = sz;
                    Subgraph m;
                    for (int v = 0; v < g.n(); ++v)
                        if (fm & (uint32_t(1) << v)) m.vertices.push_back(v);
                    m.edges = search.model_edges(fin);
                    out.witness = TMEmbedding{std::move(m), f};
                }
            }
            return;
        }
        for (int cand : l[hv]) {
            if (cand < 0 || cand >= g.n() || used[cand]) continue;
            used[cand] = 1;
            f[hv] = cand;
            inject(hv + 1);
            used[cand] = 0;
            f[hv] = -1;
        }
    };
    inject(0);
    if (out.witness) {
        auto rep = validate_tm_embedding(h, g, out.witness->model, out.witness->f, &l);
        if (!rep.ok) throw StructureError("embedding oracle produced invalid witness: " + rep.diagnostic);
    }
    return out;
}

namespace ref {

int alpha_by_subsets(const Graph& g) {
    if (g.n() > 20) throw SizeCap("subset alpha reference capped at n <= 20");
    std::vector<uint32_t> nb(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) nb[v] |= uint32_t(1) << u;
    int best = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n()); ++mask) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v)
            if ((mask >> v) & 1)
                if (nb[v] & mask) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace {
struct PartitionSearch {
    const Graph& g;
    int best;
    std::vector<char> covered;
    int covered_count = 0, path_count = 0;

    void go_right(int v, std::vector<int>& right) {
        rec();
        int tail = right.empty() ? v : right.back();
        for (int u : g.neighbors(tail)) {
            if (covered[u]) continue;
            covered[u] = 1;
            ++covered_count;
            right.push_back(u);
            go_right(v, right);
            right.pop_back();
            covered[u] = 0;
            --covered_count;
        }
    }

    void arms(int v, std::vector<int>& left) {
        std::vector<int> right;
        ++path_count;
        go_right(v, right);
        --path_count;
        int head = left.empty() ? v : left.back();
        for (int u : g.neighbors(head)) {
            if (covered[u]) continue;
            covered[u] = 1;
            ++covered_count;
            left.push_back(u);
            arms(v, left);
            left.pop_back();
            covered[u] = 0;
            --covered_count;
        }
    }

    void rec() {
        if (path_count >= best) return;
        if (covered_count == g.n()) {
            best = path_count;
            return;
        }
        int v = 0;
        while (covered[v]) ++v;
        covered[v] = 1;
        ++covered_count;
        std::vector<int> left;
        arms(v, left);
        covered[v] = 0;
        --covered_count;
    }
};
}  // namespace

int pc_by_partition_search(const Graph& g) {
    if (g.n() > 9) throw SizeCap("partition search reference capped at n <= 9");
    if (g.n() == 0) return 0;
    PartitionSearch s{g, g.n(), std::vector<char>(g.n(), 0)};
    s.rec();
    return s.best;
}

bool ham_by_permutations(const Graph& g, HamMode mode, std::optional<std::pair<int, int>> endpoints) {
    if (g.n() > 9) throw SizeCap("permutation reference capped at n <= 9");
    int n = g.n();
    if (n == 0) return false;
    if (n == 1) return mode == HamMode::Path && (!endpoints || (endpoints->first == 0 && endpoints->second == 0));
    if (mode == HamMode::Cycle && n < 3) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            if (!g.adjacent(perm[i], perm[i + 1])) ok = false;
        if (ok && mode == HamMode::Cycle && !g.adjacent(perm[n - 1], perm[0])) ok = false;
        if (ok && endpoints) {
            bool fwd = perm[0] == endpoints->first && perm[n - 1] == endpoints->second;
            bool bwd = perm[0] == endpoints->second && perm[n - 1] == endpoints->first;
            if (!fwd && !bwd) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int max_embedding_by_edge_subsets(const Graph& h, const Graph& g, const ListAssignment& l) {
    auto ges = g.edges();
    if (ges.size() > 14 || g.n() > 8) throw SizeCap("edge subset reference capped at |E| <= 14, n <= 8");
    int best = -1;
    std::vector<int> f(h.n(), -1);
    std::vector<char> used(g.n(), 0);
    std::function<void(int)> inject = [&](int hv) {
        if (hv == h.n()) {
            for (uint32_t mask = 0; mask < (uint32_t(1) << ges.size()); ++mask) {
                Subgraph m;
                std::vector<char> inc(g.n(), 0);
                for (size_t i = 0; i < ges.size(); ++i)
                    if ((mask >> i) & 1) {
                        m.edges.push_back(ges[i]);
                        inc[ges[i].first] = inc[ges[i].second] = 1;
                    }
                for (int i = 0; i < h.n(); ++i) inc[f[i]] = 1;
                for (int v = 0; v < g.n(); ++v)
                    if (inc[v]) m.vertices.push_back(v);
                if (int(m.vertices.size()) <= best) continue;
                if (validate_tm_embedding(h, g, m, f, &l).ok) best = int(m.vertices.size());
            }
            return;
        }
        for (int cand : l[hv]) {
            if (cand < 0 || cand >= g.n() || used[cand]) continue;
            used[cand] = 1;
            f[hv] = cand;
            inject(hv + 1);
            used[cand] = 0;
        }
    };
    inject(0);
    return best;
}

}  // namespace ref
}  // namespace oracles
}  // namespace alphaham
