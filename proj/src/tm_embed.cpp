#include "alphaham/tm_embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "alphaham/connectivity.hpp"
#include "alphaham/linkage.hpp"

namespace alphaham {

namespace {

int connectivity_requirement(const Graph& h, int k, int s) {
    int htotal = h.n() + h.edge_count();
    return std::max(k + 2, 10) * (3 * htotal + 3 * s);
}

// Enumerates realizations of the pattern as a drawing on the s + w local
// vertices: every pattern edge becomes a path with fresh internal vertices,
// every non-terminal W slot must end up on some path (degree 2), and the
// CD2/CD4 constraints are folded into the search as prunes that reject
// exactly the tuples the literal filters would.
struct DescriptorGen {
    const Graph& h;
    const Graph& g;
    const VertexSet& s_set;
    const ListAssignment& l;
    const std::vector<VertexSet>& comps;
    bool tau_prune;
    bool canonical;  // W slots get labels in first-use order, one representative per slot orbit
    const MergeLimits& limits;
    MergeStats* stats;
    const std::function<bool(const CutDescriptor&)>& emit;

    int s = 0, t = 0, w = 0;
    std::vector<Edge> hedges;
    std::vector<int> fw;
    std::vector<char> used;          // local id occupied (terminal or path internal)
    std::vector<Edge> edges_acc;     // accumulated M_W edges (local ids)
    std::vector<std::pair<std::vector<int>, std::vector<Edge>>> batch;  // (xi, edges) for current fw
    bool stopped = false;

    bool run() {
        s = int(s_set.size());
        t = int(comps.size());
        hedges = h.edges();
        int wmax = h.n() + h.edge_count() + 2 * s;
        int capacity = 0;
        for (const auto& c : comps) capacity += int(c.size());
        for (w = 0; w <= wmax && !stopped; ++w) {
            if (tau_prune && w > capacity) break;
            fw.assign(h.n(), -1);
            used.assign(s + w, 0);
            rec_fw(0);
        }
        return !stopped;
    }

    bool s_adjacent(int a, int b) const { return g.adjacent(s_set[a], s_set[b]); }

    bool list_allows(int hv, int gv) const {
        const VertexSet& lst = l[hv];
        return std::binary_search(lst.begin(), lst.end(), gv);
    }

    int fresh_slot() const {
        for (int j = s; j < s + w; ++j)
            if (!used[j]) return j;
        return -1;
    }

    void rec_fw(int idx) {
        if (stopped) return;
        if (idx == h.n()) {
            realize();
            return;
        }
        for (int cand = 0; cand < s + w && !stopped; ++cand) {
            if (used[cand]) continue;
            if (cand < s && !list_allows(idx, s_set[cand])) continue;  // CD4, list half
            if (canonical && cand >= s && cand != fresh_slot()) continue;
            used[cand] = 1;
            fw[idx] = cand;
            rec_fw(idx + 1);
            used[cand] = 0;
            fw[idx] = -1;
        }
    }

    void realize() {
        batch.clear();
        edges_acc.clear();
        rec_edge(0);
        if (batch.empty() || stopped) return;
        std::sort(batch.begin(), batch.end());
        batch.erase(std::unique(batch.begin(), batch.end()), batch.end());
        for (auto& [xi, edges] : batch) {
            if (stats) {
                ++stats->descriptors;
                stats->max_w = std::max(stats->max_w, w);
                if (stats->descriptors > limits.max_descriptors)
                    throw GuardrailError("descriptor budget exceeded (" + std::to_string(limits.max_descriptors) + ")");
            }
            CutDescriptor d;
            d.s = s;
            d.w = w;
            d.mw = Graph(s + w, edges);
            d.xi = xi;
            d.fw = fw;
            if (!emit(d)) {
                stopped = true;
                return;
            }
        }
    }

    void rec_edge(size_t ei) {
        if (stopped) return;
        if (ei == hedges.size()) {
            finish();
            return;
        }
        auto [a, b] = hedges[ei];
        seq_rec(ei, fw[a], -2, fw[b]);
    }

    // prev_left: local vertex before prev on the current path, -2 when prev is
    // the start terminal. CD2: an internal W vertex needs a neighbor in S.
    void seq_rec(size_t ei, int prev, int prev_left, int target) {
        if (stopped) return;
        // close the path with the target terminal
        bool cd2_ok = prev_left == -2 || prev < s || prev_left < s || target < s;
        bool cd4_ok = prev >= s || target >= s || s_adjacent(prev, target);
        bool no_dup = !(prev_left == -2 && has_edge(prev, target));
        if (cd2_ok && cd4_ok && no_dup) {
            edges_acc.emplace_back(std::min(prev, target), std::max(prev, target));
            rec_edge(ei + 1);
            edges_acc.pop_back();
        }
        // extend with an unused pool vertex
        for (int cur = 0; cur < s + w && !stopped; ++cur) {
            if (used[cur]) continue;
            if (canonical && cur >= s && cur != fresh_slot()) continue;
            if (prev_left != -2 && prev >= s && prev_left >= s && cur >= s) continue;  // CD2 prune
            if (prev < s && cur < s && !s_adjacent(prev, cur)) continue;               // CD4 prune
            used[cur] = 1;
            edges_acc.emplace_back(std::min(prev, cur), std::max(prev, cur));
            seq_rec(ei, cur, prev, target);
            edges_acc.pop_back();
            used[cur] = 0;
        }
    }

    bool has_edge(int a, int b) const {
        Edge e{std::min(a, b), std::max(a, b)};
        return std::find(edges_acc.begin(), edges_acc.end(), e) != edges_acc.end();
    }

    void finish() {
        for (int j = s; j < s + w; ++j)
            if (!used[j]) return;  // unused W slot would have degree 0

        // CD3: xi must be constant on W-adjacency classes.
        std::vector<int> cls(w);
        std::iota(cls.begin(), cls.end(), 0);
        std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
        for (auto [u, v] : edges_acc)
            if (u >= s && v >= s) {
                int a = find(u - s), b = find(v - s);
                if (a != b) cls[std::max(a, b)] = std::min(a, b);
            }
        for (int j = 0; j < w; ++j) cls[j] = find(j);

        std::vector<int> reps;
        for (int j = 0; j < w; ++j)
            if (cls[j] == j) reps.push_back(j);
        if (t == 0) {
            if (w == 0) batch.emplace_back(std::vector<int>{}, edges_acc);
            return;
        }
        std::vector<int> assign(reps.size(), 0);
        std::vector<Edge> sorted_edges = edges_acc;
        std::sort(sorted_edges.begin(), sorted_edges.end());
        std::function<void(size_t)> enum_xi = [&](size_t ri) {
            if (ri == reps.size()) {
                std::vector<int> xi(w);
                for (int j = 0; j < w; ++j)
                    xi[j] = assign[std::lower_bound(reps.begin(), reps.end(), cls[j]) - reps.begin()];
                if (tau_prune) {
                    std::vector<int> load(t, 0);
                    for (int j = 0; j < w; ++j) ++load[xi[j]];
                    for (int i = 0; i < t; ++i)
                        if (load[i] > int(comps[i].size())) return;
                }
                batch.emplace_back(std::move(xi), sorted_edges);
                return;
            }
            for (int c = 0; c < t; ++c) {
                assign[ri] = c;
                enum_xi(ri + 1);
            }
        };
        enum_xi(0);
    }
};

}  // namespace

void enumerate_cut_descriptors(const Graph& h, const Graph& g, const VertexSet& s, const ListAssignment& l,
                               const std::vector<VertexSet>& components, bool prune_tau_infeasible,
                               const MergeLimits& limits, MergeStats* stats,
                               const std::function<bool(const CutDescriptor&)>& emit, bool canonical_slot_labels) {
    validate_vertex_set(g, s);
    if (int(l.size()) != h.n()) throw PreconditionError("list assignment size mismatch");
    DescriptorGen gen{h, g, s, l, components, prune_tau_infeasible, canonical_slot_labels, limits, stats, emit};
    gen.run();
}

std::optional<std::vector<int>> tau_assignment(const CutDescriptor& d, const Graph& g, const VertexSet& s,
                                               const ListAssignment& l, const std::vector<VertexSet>& components) {
    if (d.w == 0) return std::vector<int>{};
    // Right side: all component vertices, compactly indexed.
    std::vector<int> right;  // index -> g vertex
    std::vector<int> comp_of(g.n(), -1);
    for (size_t i = 0; i < components.size(); ++i)
        for (int v : components[i]) comp_of[v] = int(i);
    std::vector<int> right_index(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (comp_of[v] >= 0) {
            right_index[v] = int(right.size());
            right.push_back(v);
        }

    // Pattern vertex placed on each slot, if any.
    std::vector<int> slot_h(d.w, -1);
    for (int hv = 0; hv < int(d.fw.size()); ++hv)
        if (d.fw[hv] >= d.s) slot_h[d.fw[hv] - d.s] = hv;

    std::vector<std::vector<int>> adj(d.w);
    for (int j = 0; j < d.w; ++j) {
        VertexSet s_nbrs;  // g ids of the slot's separator neighbors in M_W
        for (int nb : d.mw.neighbors(d.s + j))
            if (nb < d.s) s_nbrs.push_back(s[nb]);
        for (int v : components[d.xi[j]]) {
            if (slot_h[j] >= 0 && !std::binary_search(l[slot_h[j]].begin(), l[slot_h[j]].end(), v)) continue;
            bool ok = true;
            for (int snb : s_nbrs)
                if (!g.adjacent(snb, v)) {
                    ok = false;
                    break;
                }
            if (ok) adj[j].push_back(right_index[v]);
        }
        if (adj[j].empty()) return std::nullopt;
    }

    // Hopcroft-Karp, left side = slots.
    int nl = d.w, nr = int(right.size());
    std::vector<int> match_l(nl, -1), match_r(nr, -1), dist(nl);
    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < nl; ++u) {
            dist[u] = match_l[u] == -1 ? 0 : -1;
            if (dist[u] == 0) q.push(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int u2 = match_r[v];
                if (u2 == -1)
                    found = true;
                else if (dist[u2] == -1) {
                    dist[u2] = dist[u] + 1;
                    q.push(u2);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int u2 = match_r[v];
            if (u2 == -1 || (dist[u2] == dist[u] + 1 && dfs(u2))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    };
    int matched = 0;
    while (bfs()) {
        for (int u = 0; u < nl; ++u)
            if (match_l[u] == -1 && dfs(u)) ++matched;
    }
    if (matched < nl) return std::nullopt;
    std::vector<int> tau(d.w);
    for (int j = 0; j < d.w; ++j) tau[j] = right[match_l[j]];
    return tau;
}

namespace {

struct ComponentContext {
    InducedSubgraph sub;
    std::vector<int> to_local;
};

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& s) {
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    VertexSet rest;
    for (int v = 0; v < g.n(); ++v)
        if (!in_s[v]) rest.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, rest);
    std::vector<VertexSet> comps;
    for (const VertexSet& c : connected_components(sub.graph)) {
        VertexSet mapped;
        mapped.reserve(c.size());
        for (int v : c) mapped.push_back(sub.id_map[v]);
        comps.push_back(std::move(mapped));
    }
    return comps;
}

}  // namespace

EmbedOutcome merge_solve(const Graph& g, const Graph& h, const ListAssignment& l, int k, const VertexSet& s,
                         const MergeLimits& limits, MergeStats* stats) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (int(l.size()) != h.n()) throw PreconditionError("list assignment size mismatch");
    VertexSet s_sorted = s;
    std::sort(s_sorted.begin(), s_sorted.end());
    validate_vertex_set(g, s_sorted);

    std::vector<VertexSet> comps = components_without(g, s_sorted);
    int req = connectivity_requirement(h, k, int(s_sorted.size()));
    std::vector<ComponentContext> ctx;
    for (const VertexSet& c : comps) {
        ComponentContext cc;
        cc.sub = induced_subgraph(g, c);
        if (!meets_connectivity(cc.sub.graph, req))
            throw PreconditionError("component is not " + std::to_string(req) + "-connected");
        cc.to_local.assign(g.n(), -1);
        for (size_t i = 0; i < cc.sub.id_map.size(); ++i) cc.to_local[cc.sub.id_map[i]] = int(i);
        ctx.push_back(std::move(cc));
    }

    int best_size = -1;
    std::optional<TMEmbedding> best;
    std::optional<VertexSet> found_is;

    // Spanning results repeat heavily across descriptors; key on the
    // component plus the relabeled sub-pattern and terminal placement.
    std::map<std::tuple<int, std::vector<Edge>, std::vector<int>>, Subgraph> spanning_cache;

    MergeStats local_stats;
    MergeStats& st = stats ? *stats : local_stats;

    auto per_descriptor = [&](const CutDescriptor& d) -> bool {
        auto tau_opt = tau_assignment(d, g, s_sorted, l, comps);
        if (!tau_opt) return true;
        const std::vector<int>& tau = *tau_opt;

        int t = int(comps.size());
        std::vector<std::vector<int>> slots_of(t);
        for (int j = 0; j < d.w; ++j) slots_of[d.xi[j]].push_back(j);

        // Used separator vertices: terminals placed in S plus endpoints of
        // M_W edges inside S.
        std::vector<char> s_used(d.s, 0);
        for (int hv = 0; hv < h.n(); ++hv)
            if (d.fw[hv] < d.s) s_used[d.fw[hv]] = 1;
        for (auto [u, v] : d.mw.edges()) {
            if (u < d.s) s_used[u] = 1;
            if (v < d.s) s_used[v] = 1;
        }
        int used_s_count = 0;
        for (int i = 0; i < d.s; ++i) used_s_count += s_used[i];

        std::vector<std::vector<Edge>> hi_edges(t);
        for (auto [u, v] : d.mw.edges())
            if (u >= d.s && v >= d.s) hi_edges[d.xi[u - d.s]].emplace_back(u, v);

        int predicted = used_s_count;
        for (int i = 0; i < t; ++i)
            predicted += hi_edges[i].empty() ? int(slots_of[i].size()) : int(comps[i].size());
        if (predicted <= best_size) return true;

        // Solve the components.
        std::vector<Subgraph> models(t);  // g ids
        for (int i = 0; i < t; ++i) {
            if (slots_of[i].empty()) continue;
            const auto& slots = slots_of[i];
            if (hi_edges[i].empty()) {
                for (int j : slots) models[i].vertices.push_back(tau[j]);
                std::sort(models[i].vertices.begin(), models[i].vertices.end());
                continue;
            }
            // Relabel the sub-pattern onto 0..|T_i|-1 following slot order.
            std::vector<int> slot_pos(d.w, -1);
            for (size_t p = 0; p < slots.size(); ++p) slot_pos[slots[p]] = int(p);
            std::vector<Edge> local_edges;
            for (auto [u, v] : hi_edges[i]) {
                int a = slot_pos[u - d.s], b = slot_pos[v - d.s];
                local_edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(local_edges.begin(), local_edges.end());
            std::vector<int> f_local(slots.size());
            for (size_t p = 0; p < slots.size(); ++p) f_local[p] = ctx[i].to_local[tau[slots[p]]];

            auto key = std::make_tuple(i, local_edges, f_local);
            auto it = spanning_cache.find(key);
            Subgraph model_local;
            if (it != spanning_cache.end()) {
                model_local = it->second;
            } else {
                Graph hi(int(slots.size()), local_edges);
                ++st.spanning_calls;
                SpanningOutcome so = spanning_embedding_or_is(hi, ctx[i].sub.graph, f_local, k);
                if (std::holds_alternative<VertexSet>(so)) {
                    VertexSet is;
                    for (int v : std::get<VertexSet>(so)) is.push_back(ctx[i].sub.id_map[v]);
                    std::sort(is.begin(), is.end());
                    found_is = std::move(is);
                    return false;
                }
                model_local = std::get<TMEmbedding>(so).model;
                spanning_cache.emplace(key, model_local);
            }
            for (int v : model_local.vertices) models[i].vertices.push_back(ctx[i].sub.id_map[v]);
            for (auto [u, v] : model_local.edges) {
                int a = ctx[i].sub.id_map[u], b = ctx[i].sub.id_map[v];
                models[i].edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }

        // Assemble.
        TMEmbedding emb;
        std::vector<char> in_model(g.n(), 0);
        std::vector<Edge> edges;
        for (int i = 0; i < d.s; ++i)
            if (s_used[i]) in_model[s_sorted[i]] = 1;
        for (int i = 0; i < t; ++i) {
            for (int v : models[i].vertices) in_model[v] = 1;
            for (auto e : models[i].edges) edges.push_back(e);
        }
        for (auto [u, v] : d.mw.edges()) {
            if (u < d.s && v < d.s) {
                int a = s_sorted[u], b = s_sorted[v];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            } else if (u < d.s || v < d.s) {
                int sl = std::min(u, v), wl = std::max(u, v);
                int a = s_sorted[sl], b = tau[wl - d.s];
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        for (int v = 0; v < g.n(); ++v)
            if (in_model[v]) emb.model.vertices.push_back(v);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        emb.model.edges = std::move(edges);
        emb.f.resize(h.n());
        for (int hv = 0; hv < h.n(); ++hv)
            emb.f[hv] = d.fw[hv] < d.s ? s_sorted[d.fw[hv]] : tau[d.fw[hv] - d.s];

        int size = int(emb.model.vertices.size());
        if (size > best_size) {
            auto rep = validate_tm_embedding(h, g, emb.model, emb.f, &l);
            if (!rep.ok) throw StructureError("merge assembled an invalid embedding: " + rep.diagnostic);
            best_size = size;
            best = std::move(emb);
        }
        // A spanning embedding cannot be improved; later descriptors would be
        // discarded by the strict comparison anyway.
        return best_size < g.n();
    };
    enumerate_cut_descriptors(h, g, s_sorted, l, comps, /*prune_tau_infeasible=*/true, limits, &st, per_descriptor,
                              limits.canonical_slot_labels);

    if (found_is) {
        if (int(found_is->size()) != k || !is_independent_set(g, *found_is))
            throw StructureError("merge produced an invalid independent set");
        EmbedOutcome out;
        out.tag = EmbedOutcome::Tag::IndependentSet;
        out.independent = std::move(*found_is);
        return out;
    }
    if (best) {
        EmbedOutcome out;
        out.tag = EmbedOutcome::Tag::Embedding;
        out.embedding = std::move(best);
        return out;
    }
    return EmbedOutcome::infeasible();
}

EmbedOutcome max_list_tm_embedding(const Graph& g, const Graph& h, const ListAssignment& l, int k,
                                   const MergeLimits& limits, Alg2Stats* stats) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (int(l.size()) != h.n()) throw PreconditionError("list assignment size mismatch");
    for (const VertexSet& lst : l)
        for (int v : lst) g.check_vertex(v);

    if (h.n() == 0) {
        EmbedOutcome out;
        out.tag = EmbedOutcome::Tag::Embedding;
        out.embedding = TMEmbedding{};
        return out;
    }

    Alg2Stats local;
    Alg2Stats& st = stats ? *stats : local;
    int htotal = h.n() + h.edge_count();
    int64_t alpha = int64_t(3) * std::max(k + 2, 10);

    VertexSet s;
    for (int j = 1;; ++j) {
        st.iterations = j;
        st.separator_sizes.push_back(int(s.size()));
        if (j > k) throw StructureError("separator loop exceeded k iterations");
        // growth bound (alpha+2)^j * htotal, saturated
        int64_t bound = htotal;
        for (int i = 0; i < j && bound < (int64_t(1) << 40); ++i) bound *= (alpha + 2);
        if (int64_t(s.size()) > bound) throw StructureError("separator growth bound violated");

        std::vector<VertexSet> comps = components_without(g, s);
        if (int(comps.size()) >= k) {
            VertexSet is;
            for (int i = 0; i < k; ++i) is.push_back(comps[i].front());
            std::sort(is.begin(), is.end());
            if (!is_independent_set(g, is)) throw StructureError("cross-component set not independent");
            EmbedOutcome out;
            out.tag = EmbedOutcome::Tag::IndependentSet;
            out.independent = std::move(is);
            return out;
        }
        int kappa = int(std::min<int64_t>(alpha * (htotal + int64_t(s.size())), 1 << 28));
        int bad = -1;
        std::optional<VertexSet> sep;
        for (size_t i = 0; i < comps.size(); ++i) {
            InducedSubgraph sub = induced_subgraph(g, comps[i]);
            if (sub.graph.is_complete()) continue;
            auto [ok, cut] = is_c_connected(sub.graph, kappa);
            if (!ok) {
                bad = int(i);
                sep = VertexSet{};
                for (int v : *cut) sep->push_back(sub.id_map[v]);
                break;
            }
        }
        if (bad < 0) break;
        if (sep->empty()) throw StructureError("empty separator for a non-complete component");
        for (int v : *sep) s.push_back(v);
        std::sort(s.begin(), s.end());
    }
    return merge_solve(g, h, l, k, s, limits, stats ? &stats->merge : nullptr);
}

namespace {

// CD1 on the local drawing: drop isolated non-terminal separator vertices,
// require degree 2 on the remaining non-terminals, and dissolve back to the
// pattern.
bool cd1_holds(const Graph& h, const Graph& mw, const std::vector<int>& fw, int s) {
    std::vector<char> is_term(mw.n(), 0);
    for (int img : fw) is_term[img] = 1;
    VertexSet kept;
    for (int v = 0; v < mw.n(); ++v) {
        if (v < s && !is_term[v] && mw.degree(v) == 0) continue;  // not part of S'
        kept.push_back(v);
    }
    InducedSubgraph local = induced_subgraph(mw, kept);
    std::vector<int> to_local(mw.n(), -1);
    for (size_t i = 0; i < local.id_map.size(); ++i) to_local[local.id_map[i]] = int(i);

    VertexSet terms;
    for (int img : fw) terms.push_back(to_local[img]);
    VertexSet terms_sorted = terms;
    std::sort(terms_sorted.begin(), terms_sorted.end());
    for (int v = 0; v < local.graph.n(); ++v)
        if (!std::binary_search(terms_sorted.begin(), terms_sorted.end(), v) && local.graph.degree(v) != 2)
            return false;
    DissolveResult dis;
    try {
        dis = dissolve(local.graph, terms_sorted);
    } catch (const Error&) {
        return false;
    }
    std::vector<int> dis_local(local.graph.n(), -1);
    for (size_t i = 0; i < dis.id_map.size(); ++i) dis_local[dis.id_map[i]] = int(i);
    int count = 0;
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b) {
            bool in_h = h.adjacent(a, b);
            bool in_dis = dis.graph.adjacent(dis_local[terms[a]], dis_local[terms[b]]);
            if (in_h != in_dis) return false;
            count += in_dis;
        }
    return count == dis.graph.edge_count();
}

}  // namespace

std::vector<CutDescriptor> enumerate_cut_descriptors_naive(const Graph& h, const Graph& g, const VertexSet& s,
                                                           const ListAssignment& l,
                                                           const std::vector<VertexSet>& components, int max_w) {
    VertexSet s_sorted = s;
    std::sort(s_sorted.begin(), s_sorted.end());
    int sn = int(s_sorted.size());
    int t = int(components.size());
    std::vector<CutDescriptor> out;

    for (int w = 0; w <= max_w; ++w) {
        int n_local = sn + w;
        std::vector<Edge> all_pairs;
        for (int a = 0; a < n_local; ++a)
            for (int b = a + 1; b < n_local; ++b) all_pairs.emplace_back(a, b);
        if (all_pairs.size() > 30) throw SizeCap("naive enumerator fixture too large");

        std::vector<int> fw(h.n(), -1);
        std::vector<char> used(n_local, 0);
        std::function<void(int)> rec_fw = [&](int idx) {
            if (idx == h.n()) {
                for (uint64_t mask = 0; mask < (uint64_t(1) << all_pairs.size()); ++mask) {
                    std::vector<Edge> edges;
                    for (size_t i = 0; i < all_pairs.size(); ++i)
                        if ((mask >> i) & 1) edges.push_back(all_pairs[i]);
                    Graph mw(n_local, edges);

                    // CD4
                    bool ok = true;
                    for (auto [u, v] : edges)
                        if (u < sn && v < sn && !g.adjacent(s_sorted[u], s_sorted[v])) ok = false;
                    for (int hv = 0; hv < h.n() && ok; ++hv)
                        if (fw[hv] < sn &&
                            !std::binary_search(l[hv].begin(), l[hv].end(), s_sorted[fw[hv]]))
                            ok = false;
                    if (!ok) continue;
                    // CD2
                    for (int j = sn; j < n_local && ok; ++j) {
                        bool term = false;
                        for (int img : fw)
                            if (img == j) term = true;
                        if (term) continue;
                        bool near_s = false;
                        for (int nb : mw.neighbors(j))
                            if (nb < sn) near_s = true;
                        if (!near_s) ok = false;
                    }
                    if (!ok) continue;
                    // CD1
                    if (!cd1_holds(h, mw, fw, sn)) continue;
                    // CD3 via xi enumeration
                    std::vector<int> xi(w, 0);
                    std::function<void(int)> rec_xi = [&](int j) {
                        if (j == w) {
                            for (auto [u, v] : edges)
                                if (u >= sn && v >= sn && xi[u - sn] != xi[v - sn]) return;
                            CutDescriptor d;
                            d.s = sn;
                            d.w = w;
                            d.mw = mw;
                            d.xi = xi;
                            d.fw = fw;
                            out.push_back(std::move(d));
                            return;
                        }
                        for (int c = 0; c < t; ++c) {
                            xi[j] = c;
                            rec_xi(j + 1);
                        }
                    };
                    if (w == 0) {
                        if (t >= 0) rec_xi(0);
                    } else if (t > 0) {
                        rec_xi(0);
                    }
                }
                return;
            }
            for (int cand = 0; cand < n_local; ++cand) {
                if (used[cand]) continue;
                used[cand] = 1;
                fw[idx] = cand;
                rec_fw(idx + 1);
                used[cand] = 0;
            }
        };
        rec_fw(0);
    }
    return out;
}

}  // namespace alphaham
