#include "alphaham/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace alphaham {

namespace {

// Unit-capacity max-flow over the vertex-split network. Node layout:
// in(v) = 2v, out(v) = 2v+1, plus optional super-source/sink appended.
// Augmentation is BFS shortest-path; arcs are added in ascending vertex order,
// which fixes the traversal order and makes extracted paths deterministic.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                 // paired: arc i ^ 1 is the reverse
    std::vector<std::vector<int>> out;

    explicit FlowNet(int nodes) : out(nodes) {}

    void add_arc(int u, int v, int cap) {
        out[u].push_back(int(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(int(arcs.size()));
        arcs.push_back({u, 0});
    }

    int augment_limit(int s, int t, int limit) {
        int total = 0;
        std::vector<int> pre(out.size());
        while (total < limit) {
            std::fill(pre.begin(), pre.end(), -1);
            std::queue<int> q;
            q.push(s);
            pre[s] = -2;
            while (!q.empty() && pre[t] == -1) {
                int u = q.front();
                q.pop();
                for (int ai : out[u]) {
                    const Arc& a = arcs[ai];
                    if (a.cap > 0 && pre[a.to] == -1) {
                        pre[a.to] = ai;
                        if (a.to == t) break;
                        q.push(a.to);
                    }
                }
            }
            if (pre[t] == -1) break;
            for (int v = t; v != s;) {
                int ai = pre[v];
                arcs[ai].cap -= 1;
                arcs[ai ^ 1].cap += 1;
                v = arcs[ai ^ 1].to;
            }
            ++total;
        }
        return total;
    }

    // Vertices v whose split arc is saturated and in(v) is residual-reachable
    // from s while out(v) is not: the standard min vertex cut readout.
    VertexSet min_cut_vertices(int s, int n_vertices) {
        std::vector<char> reach(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        reach[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int ai : out[u]) {
                const Arc& a = arcs[ai];
                if (a.cap > 0 && !reach[a.to]) {
                    reach[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        VertexSet cut;
        for (int v = 0; v < n_vertices; ++v)
            if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
        return cut;
    }
};

// Network for internally disjoint u-v paths: u, v uncapacitated. Edge arcs get
// capacity n so every min cut consists of split arcs only, which makes the
// separator readout exact.
FlowNet split_network_pair(const Graph& g, int u, int v) {
    FlowNet net(2 * g.n());
    for (int w = 0; w < g.n(); ++w)
        if (w != u && w != v) net.add_arc(2 * w, 2 * w + 1, 1);
    net.add_arc(2 * u, 2 * u + 1, g.n());
    net.add_arc(2 * v, 2 * v + 1, g.n());
    for (int a = 0; a < g.n(); ++a)
        for (int b : g.neighbors(a)) net.add_arc(2 * a + 1, 2 * b, g.n());
    return net;
}

int pair_flow(const Graph& g, int u, int v, int limit, FlowNet* keep = nullptr) {
    FlowNet net = split_network_pair(g, u, v);
    int f = net.augment_limit(2 * u + 1, 2 * v, limit);
    if (keep) *keep = std::move(net);
    return f;
}

}  // namespace

SeparatorResult vertex_connectivity(const Graph& g) {
    if (g.is_complete()) return {std::max(0, g.n() - 1), std::nullopt};
    auto [ok, cut] = is_c_connected(g, g.n() - 1);
    if (!ok) return {int(cut->size()), std::move(cut)};
    return {g.n() - 1, std::nullopt};  // unreachable for non-complete graphs
}

std::pair<bool, std::optional<VertexSet>> is_c_connected(const Graph& g, int c) {
    if (c < 1) throw PreconditionError("connectivity target must be >= 1");
    if (g.is_complete()) return {g.n() - 1 >= c, std::nullopt};
    if (!is_connected(g)) return {false, VertexSet{}};

    int best = c;
    std::optional<VertexSet> best_cut;
    for (int i = 0; i < g.n() && i <= best; ++i) {
        for (int u = 0; u < g.n(); ++u) {
            if (u == i || g.adjacent(i, u)) continue;
            FlowNet net(0);
            int f = pair_flow(g, i, u, best, &net);
            if (f < best) {
                best = f;
                best_cut = net.min_cut_vertices(2 * i + 1, g.n());
            }
        }
    }
    if (best >= c) return {true, std::nullopt};
    return {false, std::move(best_cut)};
}

bool meets_connectivity(const Graph& g, int c) {
    if (g.is_complete()) return true;
    return is_c_connected(g, c).first;
}

PathFan menger_fan(const Graph& g, int x, const VertexSet& s, int cap) {
    return menger_fan_avoiding(g, x, s, cap, {});
}

PathFan menger_fan_avoiding(const Graph& g, int x, const VertexSet& s, int cap, const VertexSet& forbidden) {
    validate_vertex_set(g, s);
    if (s.empty()) throw PreconditionError("fan target set is empty");
    std::vector<char> in_s(g.n(), 0), blocked(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    if (in_s[x]) throw PreconditionError("fan center lies in the target set");
    for (int v : forbidden) blocked[v] = 1;
    blocked[x] = 0;

    int nodes = 2 * g.n() + 1;
    int sink = 2 * g.n();
    FlowNet net(nodes);
    for (int v = 0; v < g.n(); ++v) {
        if (blocked[v] || in_s[v] || v == x) continue;
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (int v : s)
        if (!blocked[v]) net.add_arc(2 * v, sink, 1);
    for (int a = 0; a < g.n(); ++a) {
        if (blocked[a] || in_s[a]) continue;  // target vertices are sinks only
        int from = (a == x) ? 2 * x : 2 * a + 1;
        for (int b : g.neighbors(a))
            if (!blocked[b] && b != x) net.add_arc(from, 2 * b, 1);
    }
    int limit = std::min<int>(cap, int(s.size()));
    net.augment_limit(2 * x, sink, limit);

    // Decompose: follow positive flow from x, lowest arc first.
    std::vector<int> used(net.arcs.size(), 0);
    for (size_t i = 0; i + 1 < net.arcs.size(); i += 2) used[i] = net.arcs[i ^ 1].cap;  // flow on forward arcs

    PathFan fan;
    fan.center = x;
    for (int ai : net.out[2 * x]) {
        if (ai % 2 != 0) continue;
        while (used[ai] > 0) {
            used[ai]--;
            Path p;
            p.verts.push_back(x);
            int node = net.arcs[ai].to;
            while (node != sink) {
                if (node % 2 == 0) p.verts.push_back(node / 2);
                int next_arc = -1;
                for (int aj : net.out[node])
                    if (aj % 2 == 0 && used[aj] > 0) {
                        next_arc = aj;
                        break;
                    }
                used[next_arc]--;
                node = net.arcs[next_arc].to;
            }
            fan.paths.push_back(std::move(p));
        }
    }
    return fan;
}

std::vector<Path> terminal_to_clique_paths(const Graph& g, const std::vector<int>& terminals, const VertexSet& c) {
    validate_vertex_set(g, c);
    for (size_t i = 0; i < terminals.size(); ++i) {
        g.check_vertex(terminals[i]);
        for (size_t j = i + 1; j < terminals.size(); ++j)
            if (terminals[i] == terminals[j]) throw PreconditionError("repeated terminal");
    }
    std::vector<char> in_c(g.n(), 0), is_term(g.n(), 0);
    for (int v : c) in_c[v] = 1;
    for (int v : terminals) is_term[v] = 1;

    int source = 2 * g.n(), sink = 2 * g.n() + 1;
    FlowNet net(2 * g.n() + 2);
    for (int v = 0; v < g.n(); ++v)
        if (!in_c[v]) net.add_arc(2 * v, 2 * v + 1, 1);
    for (int v : c) net.add_arc(2 * v, sink, 1);
    for (int t : terminals) net.add_arc(source, 2 * t, 1);
    for (int a = 0; a < g.n(); ++a) {
        if (in_c[a]) continue;
        for (int b : g.neighbors(a)) net.add_arc(2 * a + 1, 2 * b, 1);
    }
    int want = int(terminals.size());
    int got = net.augment_limit(source, sink, want);
    if (got < want)
        throw FlowDeficit("only " + std::to_string(got) + " of " + std::to_string(want) + " terminal-to-clique paths exist");

    std::vector<int> used(net.arcs.size(), 0);
    for (size_t i = 0; i + 1 < net.arcs.size(); i += 2) used[i] = net.arcs[i ^ 1].cap;

    std::vector<Path> paths;
    for (int t : terminals) {
        Path p;
        int node = 2 * t;
        p.verts.push_back(t);
        while (node != sink) {
            int next_arc = -1;
            for (int aj : net.out[node])
                if (aj % 2 == 0 && used[aj] > 0 && net.arcs[aj].to != 2 * t) {
                    next_arc = aj;
                    break;
                }
            used[next_arc]--;
            node = net.arcs[next_arc].to;
            if (node != sink && node % 2 == 0 && node / 2 != p.verts.back()) p.verts.push_back(node / 2);
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

bool validate_fan(const Graph& g, const PathFan& fan, const VertexSet& s, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<char> seen(g.n(), 0);
    std::vector<char> endpoint_used(g.n(), 0);
    for (const Path& p : fan.paths) {
        std::string why_path;
        if (!is_valid_path(g, p, &why_path)) return fail("invalid path: " + why_path);
        if (p.s() != fan.center) return fail("path does not start at the center");
        if (!in_s[p.t()]) return fail("path endpoint not in target set");
        if (endpoint_used[p.t()]) return fail("duplicate endpoint " + std::to_string(p.t()));
        endpoint_used[p.t()] = 1;
        for (size_t i = 1; i + 1 < p.verts.size(); ++i) {
            if (in_s[p.verts[i]]) return fail("internal vertex inside target set");
        }
        for (size_t i = 1; i < p.verts.size(); ++i) {
            if (seen[p.verts[i]]) return fail("vertex " + std::to_string(p.verts[i]) + " shared between paths");
            seen[p.verts[i]] = 1;
        }
    }
    return true;
}

}  // namespace alphaham
