#include "alphaham/graph.hpp"

#include <algorithm>
#include <numeric>

namespace alphaham {

void Graph::finalize() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        g.check_vertex(s[i]);
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) throw OutOfRange("duplicate vertex " + std::to_string(s[i]) + " in vertex set");
    }
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = int(i);
    GraphBuilder b(int(sorted.size()));
    for (int u : sorted)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0) b.add_edge(local[u], local[v]);
    return {b.build(), sorted};
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // DFS from ascending roots already yields components sorted by smallest member.
    return comps;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return connected_components(g).size() == 1;
}

bool is_valid_path(const Graph& g, const Path& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.verts.empty()) return fail("empty path");
    std::vector<char> seen(g.n(), 0);
    for (int v : p.verts) {
        if (v < 0 || v >= g.n()) return fail("vertex out of range");
        if (seen[v]) return fail("repeated vertex " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!g.adjacent(p.verts[i], p.verts[i + 1]))
            return fail("non-adjacent consecutive pair " + std::to_string(p.verts[i]) + "," + std::to_string(p.verts[i + 1]));
    return true;
}

DissolveResult dissolve(const Graph& m, const VertexSet& t) {
    validate_vertex_set(m, t);
    std::vector<char> is_term(m.n(), 0);
    for (int v : t) is_term[v] = 1;
    for (int v = 0; v < m.n(); ++v)
        if (!is_term[v] && m.degree(v) != 2)
            throw DegreeError("non-terminal " + std::to_string(v) + " has degree " + std::to_string(m.degree(v)));

    VertexSet terms = t;
    std::sort(terms.begin(), terms.end());
    std::vector<int> local(m.n(), -1);
    for (size_t i = 0; i < terms.size(); ++i) local[terms[i]] = int(i);

    GraphBuilder b(int(terms.size()));
    std::map<Edge, std::vector<int>> witness;
    auto add_result_edge = [&](int u, int v, std::vector<int> seq) {
        if (u == v) throw StructureError("dissolving creates a loop at vertex " + std::to_string(u));
        Edge e{local[std::min(u, v)], local[std::max(u, v)]};
        if (seq.front() != std::min(u, v)) std::reverse(seq.begin(), seq.end());
        if (b.has_edge(e.first, e.second))
            throw StructureError("dissolving creates a multi-edge between " + std::to_string(u) + " and " + std::to_string(v));
        b.add_edge(e.first, e.second);
        witness[e] = std::move(seq);
    };

    // Direct terminal-terminal edges.
    for (auto [u, v] : m.edges())
        if (is_term[u] && is_term[v]) add_result_edge(u, v, {u, v});

    // Maximal chains of non-terminals, discovered from their terminal anchors.
    std::vector<char> used(m.n(), 0);
    for (int u : terms) {
        for (int w : m.neighbors(u)) {
            if (is_term[w] || used[w]) continue;
            std::vector<int> seq{u, w};
            used[w] = 1;
            int prev = u, cur = w;
            while (!is_term[cur]) {
                int nxt = -1;
                for (int x : m.neighbors(cur))
                    if (x != prev) nxt = x;
                prev = cur;
                cur = nxt;
                seq.push_back(cur);
                if (!is_term[cur]) {
                    if (used[cur]) throw StructureError("non-terminal chain re-entered at " + std::to_string(cur));
                    used[cur] = 1;
                }
            }
            add_result_edge(u, cur, std::move(seq));
        }
    }

    for (int v = 0; v < m.n(); ++v)
        if (!is_term[v] && !used[v])
            throw StructureError("cycle of non-terminals through vertex " + std::to_string(v) + " reaches no terminal");

    return {b.build(), terms, std::move(witness)};
}

InducedSubgraph subgraph_to_graph(const Subgraph& sg) {
    VertexSet vs = sg.vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<int> local;
    int maxid = vs.empty() ? 0 : vs.back() + 1;
    local.assign(maxid, -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i > 0 && vs[i] == vs[i - 1]) throw OutOfRange("duplicate vertex in subgraph");
        local[vs[i]] = int(i);
    }
    GraphBuilder b(int(vs.size()));
    for (auto [u, v] : sg.edges) {
        if (u < 0 || u >= maxid || local[u] < 0 || v < 0 || v >= maxid || local[v] < 0)
            throw OutOfRange("subgraph edge endpoint not in vertex list");
        b.add_edge(local[u], local[v]);
    }
    return {b.build(), vs};
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle graph needs at least 3 vertices");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
    return b.build();
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer cycle
        b.add_edge(i, i + 5);                // spokes
        b.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return b.build();
}

}  // namespace alphaham
