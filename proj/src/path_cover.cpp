#include "alphaham/path_cover.hpp"

#include <algorithm>
#include <map>

namespace alphaham {

namespace {

void check_state(const Graph& g, const CoverState& st) {
    std::string why;
    if (!validate_cover(g, st.paths, &why)) throw StateError("invalid cover state: " + why);
}

Path oriented_to_end_at(const Path& p, int u) {
    if (p.t() == u) return p;
    if (p.s() == u) return p.reversed();
    throw StateError("vertex is not an endpoint");
}

// Special path of length >= 2: close the cycle with the s-t edge and remove
// the edge between u and its removal partner v (successor toward t, or the
// predecessor when u = t). Returns the reopened path, oriented v .. u.
Path open_cycle_at(const Path& p, int u_pos) {
    int len = int(p.verts.size());
    std::vector<int> seq;
    if (u_pos == len - 1) {
        for (int i = len - 2; i >= 0; --i) seq.push_back(p.verts[i]);
        seq.push_back(p.verts[len - 1]);
    } else {
        for (int i = u_pos + 1; i < len; ++i) seq.push_back(p.verts[i]);
        for (int i = 0; i <= u_pos; ++i) seq.push_back(p.verts[i]);
    }
    return Path{seq};
}

// Makes u an endpoint of the special path p: the two-step cycle trick for
// length >= 2, a plain orientation otherwise. Returns the path ending at u.
Path make_endpoint(const Path& p, int u) {
    if (p.verts.size() <= 2) return oriented_to_end_at(p, u);
    int pos = int(std::find(p.verts.begin(), p.verts.end(), u) - p.verts.begin());
    return open_cycle_at(p, pos);
}

}  // namespace

bool path_is_special(const Graph& g, const Path& p) {
    return p.s() == p.t() || g.adjacent(p.s(), p.t());
}

bool validate_cover(const Graph& g, const std::vector<Path>& paths, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> seen(g.n(), 0);
    size_t total = 0;
    for (size_t i = 0; i < paths.size(); ++i) {
        std::string wp;
        if (!is_valid_path(g, paths[i], &wp)) return fail("path " + std::to_string(i) + ": " + wp);
        for (int v : paths[i].verts) {
            if (seen[v]) return fail("vertex " + std::to_string(v) + " covered twice");
            seen[v] = 1;
        }
        total += paths[i].verts.size();
    }
    if (int(total) != g.n()) return fail("cover misses vertices");
    return true;
}

ReductionOutcome apply_reductions(const Graph& g, const CoverState& st, int k) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    check_state(g, st);
    const auto& paths = st.paths;
    int m = int(paths.size());

    std::vector<char> special(m);
    for (int i = 0; i < m; ++i) special[i] = path_is_special(g, paths[i]);

    // RR1: an edge between endpoints of two distinct paths merges them.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (j < i) continue;
            for (int u : {paths[i].s(), paths[i].t()})
                for (int v : {paths[j].s(), paths[j].t()})
                    if (g.adjacent(u, v)) {
                        CoverState ns = st;
                        Path joined = oriented_to_end_at(paths[i], u);
                        Path pj = paths[j].s() == v ? paths[j] : paths[j].reversed();
                        joined.verts.insert(joined.verts.end(), pj.verts.begin(), pj.verts.end());
                        ns.paths[i] = std::move(joined);
                        ns.paths.erase(ns.paths.begin() + j);
                        check_state(g, ns);
                        return {ReductionOutcome::Tag::Reduced, std::move(ns), {}};
                    }
        }

    // Subroutine 1: k usual paths certify an independent set of size m + k.
    {
        std::vector<int> usual;
        for (int i = 0; i < m; ++i)
            if (!special[i]) usual.push_back(i);
        if (int(usual.size()) >= k) {
            VertexSet is;
            for (int i = 0; i < m; ++i) is.push_back(paths[i].s());
            for (int j = 0; j < k; ++j) is.push_back(paths[usual[j]].t());
            std::sort(is.begin(), is.end());
            if (!is_independent_set(g, is)) throw StateError("subroutine 1 produced a dependent set");
            return {ReductionOutcome::Tag::Sub1, st, std::move(is)};
        }
    }

    // RR2: special path of length >= 2 with an edge into another path's endpoint.
    for (int i = 0; i < m; ++i) {
        if (!special[i] || paths[i].verts.size() < 3) continue;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            for (size_t up = 0; up < paths[i].verts.size(); ++up) {
                int u = paths[i].verts[up];
                for (int v : {paths[j].s(), paths[j].t()})
                    if (g.adjacent(u, v)) {
                        CoverState ns = st;
                        Path opened = open_cycle_at(paths[i], int(up));
                        Path pj = paths[j].s() == v ? paths[j] : paths[j].reversed();
                        opened.verts.insert(opened.verts.end(), pj.verts.begin(), pj.verts.end());
                        ns.paths[i] = std::move(opened);
                        ns.paths.erase(ns.paths.begin() + j);
                        check_state(g, ns);
                        return {ReductionOutcome::Tag::Reduced, std::move(ns), {}};
                    }
            }
        }
    }

    // RR3: an edge between two special paths of length >= 2.
    for (int i = 0; i < m; ++i) {
        if (!special[i] || paths[i].verts.size() < 3) continue;
        for (int j = i + 1; j < m; ++j) {
            if (!special[j] || paths[j].verts.size() < 3) continue;
            for (size_t up = 0; up < paths[i].verts.size(); ++up) {
                int ui = paths[i].verts[up];
                for (size_t vp = 0; vp < paths[j].verts.size(); ++vp) {
                    int uj = paths[j].verts[vp];
                    if (!g.adjacent(ui, uj)) continue;
                    CoverState ns = st;
                    Path pi = open_cycle_at(paths[i], int(up));          // ends at ui
                    Path pj = open_cycle_at(paths[j], int(vp));          // ends at uj
                    std::reverse(pj.verts.begin(), pj.verts.end());      // starts at uj
                    pi.verts.insert(pi.verts.end(), pj.verts.begin(), pj.verts.end());
                    ns.paths[i] = std::move(pi);
                    ns.paths.erase(ns.paths.begin() + j);
                    check_state(g, ns);
                    return {ReductionOutcome::Tag::Reduced, std::move(ns), {}};
                }
            }
        }
    }

    // Subroutine 2: 2k special paths with non-clique vertex sets give an
    // independent set beyond m + k (trimmed to exactly m + k).
    {
        int non_clique = 0;
        for (int i = 0; i < m; ++i)
            if (special[i] && !is_clique(g, paths[i].verts)) ++non_clique;
        if (non_clique >= 2 * k) {
            VertexSet is;
            for (int i = 0; i < m; ++i) {
                if (!special[i]) continue;
                VertexSet sorted = paths[i].verts;
                std::sort(sorted.begin(), sorted.end());
                if (!is_clique(g, sorted)) {
                    bool found = false;
                    for (size_t a = 0; a < sorted.size() && !found; ++a)
                        for (size_t b = a + 1; b < sorted.size() && !found; ++b)
                            if (!g.adjacent(sorted[a], sorted[b])) {
                                is.push_back(sorted[a]);
                                is.push_back(sorted[b]);
                                found = true;
                            }
                } else {
                    is.push_back(sorted.front());
                }
            }
            std::sort(is.begin(), is.end());
            if (int(is.size()) < m + k) throw StateError("subroutine 2 set too small");
            is.resize(m + k);
            if (!is_independent_set(g, is)) throw StateError("subroutine 2 produced a dependent set");
            return {ReductionOutcome::Tag::Sub2, st, std::move(is)};
        }
    }

    // RR4: two specials hooked into one usual path by two disjoint edges.
    for (int i = 0; i < m; ++i) {
        if (!special[i]) continue;
        for (int j = 0; j < m; ++j) {
            if (j == i || !special[j]) continue;
            for (int lu = 0; lu < m; ++lu) {
                if (special[lu] || lu == i || lu == j) continue;
                const auto& pl = paths[lu].verts;
                for (size_t a = 0; a < pl.size(); ++a) {
                    int ui = -1;
                    for (int cand : paths[i].verts)
                        if (g.adjacent(cand, pl[a])) {
                            ui = ui < 0 ? cand : std::min(ui, cand);
                        }
                    if (ui < 0) continue;
                    for (size_t b = a + 1; b < pl.size(); ++b) {
                        int uj = -1;
                        for (int cand : paths[j].verts)
                            if (g.adjacent(cand, pl[b])) {
                                uj = uj < 0 ? cand : std::min(uj, cand);
                            }
                        if (uj < 0) continue;

                        Path qi = make_endpoint(paths[i], ui);
                        for (size_t x = a + 1; x-- > 0;) qi.verts.push_back(pl[x]);  // x_a down to s_l
                        Path qj = make_endpoint(paths[j], uj);
                        for (size_t x = b; x < pl.size(); ++x) qj.verts.push_back(pl[x]);

                        CoverState ns;
                        int specials_before = 0;
                        for (int q = 0; q < m; ++q) specials_before += special[q];
                        for (int q = 0; q < m; ++q) {
                            if (q == i)
                                ns.paths.push_back(qi);
                            else if (q == j)
                                ns.paths.push_back(qj);
                            else if (q == lu) {
                                if (b > a + 1) {
                                    std::vector<int> middle(pl.begin() + a + 1, pl.begin() + b);
                                    ns.paths.push_back(Path{middle});
                                }
                            } else
                                ns.paths.push_back(paths[q]);
                        }
                        check_state(g, ns);
                        int specials_after = 0;
                        for (const Path& p : ns.paths) specials_after += path_is_special(g, p);
                        if (specials_after >= specials_before || ns.paths.size() > paths.size())
                            throw StateError("RR4 failed to make progress");
                        return {ReductionOutcome::Tag::Reduced, std::move(ns), {}};
                    }
                }
            }
        }
    }

    return {ReductionOutcome::Tag::Irreducible, st, {}};
}

std::vector<Path> gallai_milgram_cover(const Graph& g) {
    std::vector<Path> paths;
    for (int v = 0; v < g.n(); ++v) paths.push_back(Path{{v}});
    bool merged = true;
    while (merged) {
        merged = false;
        int m = int(paths.size());
        for (int i = 0; i < m && !merged; ++i)
            for (int j = i + 1; j < m && !merged; ++j)
                for (int u : {paths[i].s(), paths[i].t()})
                    for (int v : {paths[j].s(), paths[j].t()})
                        if (!merged && g.adjacent(u, v)) {
                            Path joined = oriented_to_end_at(paths[i], u);
                            Path pj = paths[j].s() == v ? paths[j] : paths[j].reversed();
                            joined.verts.insert(joined.verts.end(), pj.verts.begin(), pj.verts.end());
                            paths[i] = std::move(joined);
                            paths.erase(paths.begin() + j);
                            merged = true;
                        }
    }
    return paths;
}

std::vector<int> selected_cliques(const Graph& g, const VertexSet& s, const std::vector<VertexSet>& cliques) {
    validate_vertex_set(g, s);
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> owner(g.n(), -1);
    for (size_t i = 0; i < cliques.size(); ++i) {
        VertexSet c = cliques[i];
        std::sort(c.begin(), c.end());
        if (c.empty()) throw PreconditionError("empty clique");
        if (!is_clique(g, c)) throw PreconditionError("set is not a clique");
        for (int v : c) {
            if (in_s[v]) throw PreconditionError("clique intersects the separator");
            if (owner[v] >= 0) throw PreconditionError("cliques are not disjoint");
            owner[v] = int(i);
        }
        // Must induce a full connected component of g - s: no edge may leave
        // the clique except into s.
        for (int v : c)
            for (int u : g.neighbors(v))
                if (!in_s[u] && owner[u] != int(i) && std::binary_search(c.begin(), c.end(), u) == false)
                    if (owner[u] < 0 || owner[u] != int(i))
                        if (std::find(c.begin(), c.end(), u) == c.end())
                            throw PreconditionError("clique is not a connected component of g - s");
    }

    std::vector<char> marked(cliques.size(), 0);
    int limit = 2 * int(s.size());
    for (int v : s) {
        std::vector<char> has_neighbor(cliques.size(), 0);
        for (int u : g.neighbors(v))
            if (owner[u] >= 0) has_neighbor[owner[u]] = 1;
        int taken = 0;
        for (size_t i = 0; i < cliques.size() && taken < limit; ++i)
            if (has_neighbor[i]) {
                marked[i] = 1;
                ++taken;
            }
    }
    std::vector<int> x;
    for (size_t i = 0; i < cliques.size(); ++i)
        if (marked[i]) x.push_back(int(i));
    return x;
}

namespace {

// Reads the i-path cover off a spanning model of j K1 + (i-j) K2.
std::vector<Path> cover_from_model(const Graph& h, const TMEmbedding& emb) {
    std::map<int, std::vector<int>> adj;
    for (int v : emb.model.vertices) adj[v];
    for (auto [u, v] : emb.model.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<Path> cover;
    std::vector<char> emitted_h(h.n(), 0);
    for (int hv = 0; hv < h.n(); ++hv) {
        if (emitted_h[hv]) continue;
        if (h.degree(hv) == 0) {
            cover.push_back(Path{{emb.f[hv]}});
            emitted_h[hv] = 1;
            continue;
        }
        int other = h.neighbors(hv)[0];
        emitted_h[hv] = emitted_h[other] = 1;
        int goal = emb.f[other];
        std::vector<int> seq{emb.f[hv]};
        int prev = -1, cur = emb.f[hv];
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
    return cover;
}

}  // namespace

BelowGMOutcome solve_small_cover(const Graph& g, int k, const std::vector<Path>& cover, const MergeLimits& limits) {
    if (k < 0) throw PreconditionError("k must be >= 0");
    std::string why;
    if (!validate_cover(g, cover, &why)) throw StateError("invalid input cover: " + why);

    if (g.edge_count() == 0) return {cover, std::nullopt};  // pc(G) = n, the cover is trivial

    int pprime = int(cover.size());
    int param = pprime + k;
    ListAssignment lists;
    for (int i = 1; i <= pprime; ++i) {
        for (int j = 0; j <= i - 1; ++j) {
            GraphBuilder hb(j + 2 * (i - j));
            for (int e = 0; e < i - j; ++e) hb.add_edge(j + 2 * e, j + 2 * e + 1);
            Graph hij = hb.build();
            lists = trivial_lists(hij, g);
            EmbedOutcome out = max_list_tm_embedding(g, hij, lists, std::max(param, 1), limits);
            if (out.tag == EmbedOutcome::Tag::IndependentSet) {
                if (int(out.independent.size()) != std::max(param, 1))
                    throw StructureError("independent set certificate has the wrong size");
                return {cover, std::move(out.independent)};
            }
            if (out.tag == EmbedOutcome::Tag::Embedding && int(out.embedding->size()) == g.n()) {
                std::vector<Path> opt = cover_from_model(hij, *out.embedding);
                if (!validate_cover(g, opt, &why)) throw StructureError("model-to-cover conversion failed: " + why);
                if (int(opt.size()) != i) throw StructureError("converted cover has the wrong size");
                return {std::move(opt), std::nullopt};
            }
        }
    }
    throw StructureError("small-cover grid exhausted without finding the guaranteed cover");
}

BelowGMOutcome below_gm(const Graph& g, int k, const MergeLimits& limits) {
    if (k < 1) throw PreconditionError("k must be >= 1");
    if (g.n() == 0) return {{}, std::nullopt};

    CoverState st;
    for (int v = 0; v < g.n(); ++v) st.paths.push_back(Path{{v}});

    // Potential (m, #special) strictly lexicographically decreases.
    while (true) {
        ReductionOutcome r = apply_reductions(g, st, k);
        if (r.tag == ReductionOutcome::Tag::Reduced) {
            st = std::move(r.state);
            continue;
        }
        if (r.tag == ReductionOutcome::Tag::Sub1 || r.tag == ReductionOutcome::Tag::Sub2)
            return {st.paths, std::move(r.independent)};
        break;
    }

    const auto& paths = st.paths;
    int m = int(paths.size());

    // Claim 3.7 separator: the unique connector of each usual path.
    std::vector<char> special(m);
    for (int i = 0; i < m; ++i) special[i] = path_is_special(g, paths[i]);
    std::vector<char> on_special(g.n(), 0);
    for (int i = 0; i < m; ++i)
        if (special[i])
            for (int v : paths[i].verts) on_special[v] = 1;
    VertexSet s;
    for (int i = 0; i < m; ++i) {
        if (special[i]) continue;
        std::vector<int> connectors;
        for (int v : paths[i].verts) {
            bool is_connector = false;
            for (int u : g.neighbors(v))
                if (on_special[u]) is_connector = true;
            if (is_connector) connectors.push_back(v);
        }
        if (connectors.size() == 1) s.push_back(connectors[0]);
    }
    std::sort(s.begin(), s.end());
    if (int(s.size()) >= k) throw StructureError("separator is not smaller than k");

    // Special paths whose vertex set is a clique component of g - s.
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> candidates;
    for (int i = 0; i < m; ++i) {
        if (!special[i]) continue;
        bool isolated = true;
        for (int v : paths[i].verts) {
            if (in_s[v]) isolated = false;
            for (int u : g.neighbors(v))
                if (!in_s[u]) {
                    bool inside = std::find(paths[i].verts.begin(), paths[i].verts.end(), u) != paths[i].verts.end();
                    if (!inside) isolated = false;
                }
        }
        VertexSet vs = paths[i].verts;
        std::sort(vs.begin(), vs.end());
        if (isolated && is_clique(g, vs)) candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        int ma = *std::min_element(paths[a].verts.begin(), paths[a].verts.end());
        int mb = *std::min_element(paths[b].verts.begin(), paths[b].verts.end());
        return ma < mb;
    });

    int h = std::max(0, m - 4 * k);
    if (int(candidates.size()) < h)
        throw StructureError("fewer clique components than the structure guarantees");

    std::vector<int> chosen(candidates.begin(), candidates.begin() + h);
    std::vector<VertexSet> clique_sets;
    for (int idx : chosen) {
        VertexSet vs = paths[idx].verts;
        std::sort(vs.begin(), vs.end());
        clique_sets.push_back(std::move(vs));
    }
    std::vector<int> x = selected_cliques(g, s, clique_sets);
    std::vector<char> keep_chosen(h, 0);
    for (int xi : x) keep_chosen[xi] = 1;

    std::vector<char> removed_path(m, 0);
    std::vector<int> removed_indices;
    for (int p = 0; p < h; ++p)
        if (!keep_chosen[p]) {
            removed_path[chosen[p]] = 1;
            removed_indices.push_back(chosen[p]);
        }

    std::vector<char> removed_vertex(g.n(), 0);
    for (int idx : removed_indices)
        for (int v : paths[idx].verts) removed_vertex[v] = 1;
    VertexSet kept;
    for (int v = 0; v < g.n(); ++v)
        if (!removed_vertex[v]) kept.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, kept);
    std::vector<int> to_local(g.n(), -1);
    for (size_t i = 0; i < sub.id_map.size(); ++i) to_local[sub.id_map[i]] = int(i);

    std::vector<Path> small_cover;
    for (int i = 0; i < m; ++i) {
        if (removed_path[i]) continue;
        Path p;
        for (int v : paths[i].verts) p.verts.push_back(to_local[v]);
        small_cover.push_back(std::move(p));
    }
    if (int(small_cover.size()) > 4 * k + 2 * k * k)
        throw StructureError("reduced cover exceeds the 4k + 2k^2 bound");

    BelowGMOutcome inner = solve_small_cover(sub.graph, 2 * k, small_cover, limits);

    BelowGMOutcome out;
    for (const Path& p : inner.cover) {
        Path mapped;
        for (int v : p.verts) mapped.verts.push_back(sub.id_map[v]);
        out.cover.push_back(std::move(mapped));
    }
    for (int idx : removed_indices) out.cover.push_back(paths[idx]);

    if (inner.independent) {
        VertexSet is;
        for (int v : *inner.independent) {
            int gv = sub.id_map[v];
            if (!in_s[gv]) is.push_back(gv);
        }
        for (int idx : removed_indices)
            is.push_back(*std::min_element(paths[idx].verts.begin(), paths[idx].verts.end()));
        std::sort(is.begin(), is.end());
        int want = int(out.cover.size()) + k;
        if (int(is.size()) < want) throw StructureError("certificate fixup lost too many vertices");
        is.resize(want);
        if (!is_independent_set(g, is)) throw StructureError("fixed-up certificate is not independent");
        out.independent = std::move(is);
    }
    std::string why;
    if (!validate_cover(g, out.cover, &why)) throw StructureError("final cover invalid: " + why);
    return out;
}

}  // namespace alphaham
