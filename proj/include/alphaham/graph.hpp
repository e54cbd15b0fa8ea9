#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphaham/errors.hpp"

namespace alphaham {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;  // canonical form u < v

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0), adj_(n) {}
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        finalize();
    }

    int n() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return u != v && (bits_[size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    /// Edges in canonical order: u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw OutOfRange("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

  private:
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) return;
        bits_[size_t(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
        bits_[size_t(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }

    void finalize();

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::vector<int>> adj_;

    friend class GraphBuilder;
};

/// Incremental construction helper; produces an immutable Graph.
class GraphBuilder {
  public:
    explicit GraphBuilder(int n) : g_(n) {}
    void add_edge(int u, int v) { g_.add_edge_internal(u, v); }
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    Graph build() {
        g_.finalize();
        return std::move(g_);
    }

  private:
    Graph g_;
};

/// A path is a sequence of distinct vertices, consecutive ones adjacent in the
/// host graph. A single vertex is a trivial path with s = t.
struct Path {
    std::vector<int> verts;

    Path() = default;
    explicit Path(std::vector<int> vs) : verts(std::move(vs)) {}

    int s() const { return verts.front(); }
    int t() const { return verts.back(); }
    int length() const { return int(verts.size()) - 1; }
    size_t size() const { return verts.size(); }
    bool trivial() const { return verts.size() == 1; }

    Path reversed() const {
        Path p(*this);
        std::reverse(p.verts.begin(), p.verts.end());
        return p;
    }
};

/// Subgraph of a host graph, given by explicit vertex and edge lists (host ids).
struct Subgraph {
    VertexSet vertices;            // sorted ascending
    std::vector<Edge> edges;       // canonical order

    size_t size() const { return vertices.size(); }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> id_map;  // local id -> original id
};

struct DissolveResult {
    Graph graph;                               // on |T| vertices, local ids
    std::vector<int> id_map;                   // local id -> original id in M
    std::map<Edge, std::vector<int>> witness;  // local edge -> contracted path in M (original ids)
};

void validate_vertex_set(const Graph& g, const VertexSet& s);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Checks that p is a path of g: distinct vertices, consecutive ones adjacent.
bool is_valid_path(const Graph& g, const Path& p, std::string* why = nullptr);

/// Repeatedly dissolves every vertex outside T (each must have degree exactly 2).
/// The witness map records, per resulting edge, the full contracted vertex
/// sequence in M, endpoints included.
DissolveResult dissolve(const Graph& m, const VertexSet& t);

/// Builds a Graph from a subgraph description (relabels to 0..|V|-1).
InducedSubgraph subgraph_to_graph(const Subgraph& sg);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

}  // namespace alphaham
