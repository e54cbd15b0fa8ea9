#include "alphaham/certificates.hpp"

#include <algorithm>

namespace alphaham {
namespace certs {

json embedding_json(const TMEmbedding& emb) {
    json j;
    j["model_vertices"] = emb.model.vertices;
    auto arr = json::array();
    for (auto [u, v] : emb.model.edges) arr.push_back({u, v});
    j["model_edges"] = arr;
    json tm = json::object();
    for (size_t hv = 0; hv < emb.f.size(); ++hv) tm[std::to_string(hv)] = emb.f[hv];
    j["terminal_map"] = tm;
    return j;
}

json independent_set_json(const VertexSet& is) {
    json j;
    j["independent_set"] = is;
    return j;
}

json cover_json(const std::vector<Path>& cover, const std::optional<VertexSet>& is) {
    json j;
    auto arr = json::array();
    for (const Path& p : cover) arr.push_back(p.verts);
    j["paths"] = arr;
    if (is)
        j["certificate"] = json{{"independent_set", *is}};
    else
        j["certificate"] = "minimum";
    return j;
}

json infeasible_json() { return json{{"infeasible", true}}; }

namespace {

VerifyResult fail(const std::string& m) { return {false, m}; }
VerifyResult pass() { return {true, "valid"}; }

bool read_embedding(const json& cert, TMEmbedding& emb, std::string& err) {
    try {
        if (!cert.contains("model_vertices") || !cert.contains("model_edges") || !cert.contains("terminal_map")) {
            err = "missing embedding fields";
            return false;
        }
        emb.model.vertices = cert["model_vertices"].get<std::vector<int>>();
        emb.model.edges.clear();
        for (auto& e : cert["model_edges"]) {
            int u = e[0].get<int>(), v = e[1].get<int>();
            emb.model.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::map<int, int> tm;
        for (auto& [key, val] : cert["terminal_map"].items()) tm[std::stoi(key)] = val.get<int>();
        emb.f.clear();
        for (size_t hv = 0; hv < tm.size(); ++hv) {
            auto it = tm.find(int(hv));
            if (it == tm.end()) {
                err = "terminal_map keys are not 0..|V(H)|-1";
                return false;
            }
            emb.f.push_back(it->second);
        }
        return true;
    } catch (const std::exception& e) {
        err = std::string("malformed embedding certificate: ") + e.what();
        return false;
    }
}

VerifyResult verify_embedding_against(const Graph& h, const Graph& g, const json& cert, const ListAssignment* lists,
                                      bool require_spanning) {
    TMEmbedding emb;
    std::string err;
    if (!read_embedding(cert, emb, err)) return fail(err);
    if (int(emb.f.size()) != h.n()) return fail("terminal map size differs from pattern order");
    auto rep = validate_tm_embedding(h, g, emb.model, emb.f, lists);
    if (!rep.ok) return fail(rep.diagnostic);
    if (require_spanning && int(emb.model.vertices.size()) != g.n()) return fail("embedding is not spanning");
    return pass();
}

VerifyResult verify_is(const Graph& g, const json& cert, int expected) {
    VertexSet is;
    try {
        is = cert["independent_set"].get<std::vector<int>>();
    } catch (const std::exception&) {
        return fail("malformed independent set certificate");
    }
    for (int v : is)
        if (v < 0 || v >= g.n()) return fail("independent set vertex out of range");
    VertexSet sorted = is;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("duplicate vertex");
    if (!is_independent_set(g, sorted)) return fail("set is not independent");
    if (expected >= 0 && int(is.size()) != expected)
        return fail("independent set has size " + std::to_string(is.size()) + ", expected " + std::to_string(expected));
    return pass();
}

VerifyResult verify_cover(const Graph& g, const json& cert, int k) {
    if (!cert.contains("paths")) return fail("missing paths");
    std::vector<Path> cover;
    try {
        for (auto& p : cert["paths"]) cover.push_back(Path{p.get<std::vector<int>>()});
    } catch (const std::exception&) {
        return fail("malformed cover");
    }
    std::string why;
    if (!validate_cover(g, cover, &why)) return fail(why);
    if (cert.contains("certificate") && cert["certificate"].is_object()) {
        if (k < 0) return fail("independence certificate needs k");
        int expected = int(cover.size()) + k;
        return verify_is(g, cert["certificate"], expected);
    }
    return pass();
}

Graph cycle_pattern(int q) {
    GraphBuilder b(q);
    for (int i = 0; i < q; ++i) b.add_edge(i, (i + 1) % q);
    return b.build();
}

}  // namespace

VerifyResult verify_certificate(const std::string& problem, const Graph& g, const json& cert, const VerifyArgs& args) {
    bool is_embedding = cert.contains("model_vertices");
    bool is_indep = cert.contains("independent_set") && !cert.contains("paths");
    bool is_cover = cert.contains("paths");

    if (is_indep) return verify_is(g, cert, args.k);

    if (problem == "hampath") {
        if (!is_embedding) return fail("hampath expects an embedding certificate");
        if (g.n() == 1) {
            TMEmbedding emb;
            std::string err;
            if (!read_embedding(cert, emb, err)) return fail(err);
            if (emb.model.vertices == VertexSet{0} && emb.model.edges.empty()) return pass();
            return fail("single-vertex host expects the trivial model");
        }
        Graph h(2, {{0, 1}});
        ListAssignment lists = trivial_lists(h, g);
        if (args.endpoints) {
            lists[0] = {args.endpoints->first};
            lists[1] = {args.endpoints->second};
        }
        return verify_embedding_against(h, g, cert, &lists, true);
    }
    if (problem == "hamcycle") {
        if (!is_embedding) return fail("hamcycle expects an embedding certificate");
        return verify_embedding_against(cycle_pattern(3), g, cert, nullptr, true);
    }
    if (problem == "pathcover" || problem == "below-gm") {
        if (!is_cover) return fail(problem + " expects a cover certificate");
        return verify_cover(g, cert, args.k);
    }
    if (problem == "linkage") {
        if (!is_embedding) return fail("linkage expects an embedding certificate");
        if (!args.pairs) return fail("linkage verification needs the pairs");
        int l = args.pairs->l();
        GraphBuilder hb(2 * l);
        for (int i = 0; i < l; ++i) hb.add_edge(2 * i, 2 * i + 1);
        Graph h = hb.build();
        ListAssignment lists(2 * l);
        for (int i = 0; i < l; ++i) {
            lists[2 * i] = {args.pairs->pairs[i].first};
            lists[2 * i + 1] = {args.pairs->pairs[i].second};
        }
        return verify_embedding_against(h, g, cert, &lists, true);
    }
    if (problem == "tcycle") {
        if (!is_embedding) return fail("tcycle expects an embedding certificate");
        if (!args.terminals) return fail("tcycle verification needs the terminals");
        TMEmbedding emb;
        std::string err;
        if (!read_embedding(cert, emb, err)) return fail(err);
        int q = int(emb.f.size());
        if (q < 3 || q < int(args.terminals->size())) return fail("cycle pattern too small");
        auto rep = validate_tm_embedding(cycle_pattern(q), g, emb.model, emb.f);
        if (!rep.ok) return fail(rep.diagnostic);
        VertexSet images = emb.f;
        std::sort(images.begin(), images.end());
        for (int t : *args.terminals)
            if (!std::binary_search(images.begin(), images.end(), t))
                return fail("terminal " + std::to_string(t) + " not on the cycle");
        return pass();
    }
    if (problem == "embed") {
        if (!is_embedding) return fail("embed expects an embedding certificate");
        if (!args.pattern) return fail("embed verification needs the pattern graph");
        return verify_embedding_against(*args.pattern, g, cert, args.lists, false);
    }
    return fail("unknown problem '" + problem + "'");
}

}  // namespace certs
}  // namespace alphaham
