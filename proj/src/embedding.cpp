#include "alphaham/embedding.hpp"

#include <algorithm>

namespace alphaham {

ListAssignment trivial_lists(const Graph& h, const Graph& g) {
    VertexSet all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    return ListAssignment(h.n(), all);
}

ValidationReport validate_tm_embedding(const Graph& h, const Graph& g, const Subgraph& m, const std::vector<int>& f,
                                       const ListAssignment* l) {
    auto fail = [](const std::string& d) { return ValidationReport{false, d}; };

    for (int v : m.vertices)
        if (v < 0 || v >= g.n()) return fail("subgraph: model vertex out of host range");
    std::vector<char> in_model(g.n(), 0);
    for (int v : m.vertices) {
        if (in_model[v]) return fail("subgraph: duplicate model vertex");
        in_model[v] = 1;
    }
    for (auto [u, v] : m.edges) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !in_model[u] || !in_model[v])
            return fail("subgraph: model edge endpoint not a model vertex");
        if (!g.adjacent(u, v)) return fail("subgraph: model edge absent from host");
    }

    if (int(f.size()) != h.n()) return fail("injectivity: map size differs from pattern order");
    std::vector<char> image(g.n(), 0);
    for (int hv = 0; hv < h.n(); ++hv) {
        int gv = f[hv];
        if (gv < 0 || gv >= g.n() || !in_model[gv]) return fail("injectivity: image outside the model");
        if (image[gv]) return fail("injectivity: map not injective");
        image[gv] = 1;
    }
    if (l) {
        if (int(l->size()) != h.n()) return fail("list: assignment size differs from pattern order");
        for (int hv = 0; hv < h.n(); ++hv)
            if (std::find((*l)[hv].begin(), (*l)[hv].end(), f[hv]) == (*l)[hv].end())
                return fail("list: image not in its list");
    }

    InducedSubgraph local = subgraph_to_graph(m);
    std::vector<int> to_local(g.n(), -1);
    for (size_t i = 0; i < local.id_map.size(); ++i) to_local[local.id_map[i]] = int(i);

    VertexSet terminals;
    for (int hv = 0; hv < h.n(); ++hv) terminals.push_back(to_local[f[hv]]);
    VertexSet terminals_sorted = terminals;
    std::sort(terminals_sorted.begin(), terminals_sorted.end());

    for (int v = 0; v < local.graph.n(); ++v) {
        bool is_term = std::binary_search(terminals_sorted.begin(), terminals_sorted.end(), v);
        if (!is_term && local.graph.degree(v) != 2) return fail("degree: non-terminal without degree 2");
    }

    DissolveResult dis;
    try {
        dis = dissolve(local.graph, terminals_sorted);
    } catch (const StructureError& e) {
        return fail(std::string("dissolve: ") + e.what());
    } catch (const DegreeError& e) {
        return fail(std::string("degree: ") + e.what());
    }

    // dis.graph lives on terminals_sorted; translate h's edges through f.
    std::vector<int> dis_local(local.graph.n(), -1);
    for (size_t i = 0; i < dis.id_map.size(); ++i) dis_local[dis.id_map[i]] = int(i);
    int claimed = 0;
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b) {
            bool in_h = h.adjacent(a, b);
            bool in_dis = dis.graph.adjacent(dis_local[terminals[a]], dis_local[terminals[b]]);
            if (in_h != in_dis) return fail("isomorphism: dissolved model differs from pattern");
            claimed += in_dis;
        }
    if (claimed != dis.graph.edge_count()) return fail("isomorphism: dissolved model has extra edges");

    return {};
}

bool embedding_spans(const Graph& g, const TMEmbedding& emb) {
    return int(emb.model.vertices.size()) == g.n();
}

}  // namespace alphaham
