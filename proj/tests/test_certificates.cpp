#include "doctest.h"

#include <random>

#include "alphaham/applications.hpp"
#include "alphaham/certificates.hpp"
#include "alphaham/oracles.hpp"

using namespace alphaham;
using certs::VerifyArgs;

TEST_CASE("hamiltonian path and cycle round-trip through verify") {
    Graph k5 = complete_graph(5);
    auto hp = hamiltonian_path(k5, 2);
    REQUIRE(hp.exists);
    auto cert = certs::embedding_json(*hp.embedding);
    CHECK(certs::verify_certificate("hampath", k5, cert, {}).ok);

    auto hc = hamiltonian_cycle(k5, 2);
    REQUIRE(hc.exists);
    CHECK(certs::verify_certificate("hamcycle", k5, certs::embedding_json(*hc.embedding), {}).ok);

    // tampering breaks it
    auto bad = cert;
    bad["model_vertices"] = std::vector<int>{0, 1, 2};
    CHECK(!certs::verify_certificate("hampath", k5, bad, {}).ok);
}

TEST_CASE("single-vertex host hampath certificate") {
    Graph k1(1);
    auto hp = hamiltonian_path(k1, 1);
    REQUIRE(hp.exists);
    CHECK(certs::verify_certificate("hampath", k1, certs::embedding_json(*hp.embedding), {}).ok);
}

TEST_CASE("endpoint-pinned hampath") {
    Graph p4 = path_graph(4);
    auto hp = hamiltonian_path(p4, 1, {{0, 3}});
    REQUIRE(hp.exists);
    VerifyArgs args;
    args.endpoints = {{0, 3}};
    CHECK(certs::verify_certificate("hampath", p4, certs::embedding_json(*hp.embedding), args).ok);
    auto hp2 = hamiltonian_path(p4, 1, {{0, 2}});
    CHECK(!hp2.exists);
}

TEST_CASE("below-gm cover certificates") {
    Graph c5 = cycle_graph(5);
    auto out = below_gm(c5, 1);
    auto cert = certs::cover_json(out.cover, out.independent);
    VerifyArgs args;
    args.k = 1;
    CHECK(certs::verify_certificate("below-gm", c5, cert, args).ok);

    // broken partition
    auto bad = cert;
    bad["paths"][0][0] = 4;
    bad["paths"].push_back(std::vector<int>{4});
    CHECK(!certs::verify_certificate("below-gm", c5, bad, args).ok);
}

TEST_CASE("independent set certificates check size arithmetic") {
    Graph c5 = cycle_graph(5);
    certs::json cover = {{"paths", {{0, 1}, {2, 3}, {4}}}, {"certificate", {{"independent_set", {0, 2}}}}};
    VerifyArgs args;
    args.k = 1;
    // |IS| must equal |paths| + k = 4
    CHECK(!certs::verify_certificate("below-gm", c5, cover, args).ok);

    certs::json is_only = {{"independent_set", {0, 2}}};
    VerifyArgs args2;
    args2.k = 2;
    CHECK(certs::verify_certificate("hampath", c5, is_only, args2).ok);
    args2.k = 3;
    CHECK(!certs::verify_certificate("hampath", c5, is_only, args2).ok);
    certs::json dependent = {{"independent_set", {0, 1}}};
    VerifyArgs args3;
    CHECK(!certs::verify_certificate("hampath", c5, dependent, args3).ok);
}

TEST_CASE("linkage certificate round-trip") {
    Graph k6 = complete_graph(6);
    TerminalPairs pairs{{{0, 1}, {2, 3}}};
    auto out = linkage_embedding(k6, pairs, 2);
    REQUIRE(out.tag == EmbedOutcome::Tag::Embedding);
    REQUIRE(int(out.embedding->size()) == 6);
    VerifyArgs args;
    args.pairs = pairs;
    CHECK(certs::verify_certificate("linkage", k6, certs::embedding_json(*out.embedding), args).ok);

    auto paths = linkage_paths_from_model(Graph(4, {{0, 1}, {2, 3}}), *out.embedding);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].s() == 0);
    CHECK(paths[0].t() == 1);
    CHECK(paths[1].s() == 2);
    CHECK(paths[1].t() == 3);
}

TEST_CASE("tcycle certificate round-trip") {
    Graph k6 = complete_graph(6);
    auto out = tcycle_max(k6, {0, 2, 4}, 2);
    REQUIRE(out.tag == TCycleOutcome::Tag::Cycle);
    CHECK(int(out.embedding->size()) == 6);  // the maximum cycle is hamiltonian here
    VerifyArgs args;
    args.terminals = VertexSet{0, 2, 4};
    CHECK(certs::verify_certificate("tcycle", k6, certs::embedding_json(*out.embedding), args).ok);

    // small terminal sets go through the padded-cycle encoding
    auto out2 = tcycle_max(k6, {3}, 2);
    REQUIRE(out2.tag == TCycleOutcome::Tag::Cycle);
    VerifyArgs args2;
    args2.terminals = VertexSet{3};
    CHECK(certs::verify_certificate("tcycle", k6, certs::embedding_json(*out2.embedding), args2).ok);

    Graph p3 = path_graph(3);
    auto none = tcycle_max(p3, {0, 1, 2}, 3);
    CHECK(none.tag == TCycleOutcome::Tag::Infeasible);
}

TEST_CASE("tcycle ordering reduction is complete for |T| = 3 and 4") {
    // Independent oracle: a cycle with vertex set S containing T is a
    // hamiltonian cycle of the induced subgraph, so the maximum cycle through
    // T is the largest such S.
    auto oracle_max_cycle = [](const Graph& g, const VertexSet& t) {
        int best = 0;
        for (uint32_t mask = 0; mask < (uint32_t(1) << g.n()); ++mask) {
            bool has_t = true;
            for (int v : t)
                if (!(mask & (uint32_t(1) << v))) has_t = false;
            if (!has_t || __builtin_popcount(mask) < 3) continue;
            if (__builtin_popcount(mask) <= best) continue;
            VertexSet s;
            for (int v = 0; v < g.n(); ++v)
                if (mask & (uint32_t(1) << v)) s.push_back(v);
            if (oracles::brute_ham(induced_subgraph(g, s).graph, oracles::HamMode::Cycle).exists)
                best = int(s.size());
        }
        return best;
    };
    std::mt19937_64 rng(101);
    auto coin = [&]() { return double(rng() >> 11) * (1.0 / 9007199254740992.0); };
    int decided = 0;
    for (int iter = 0; iter < 30; ++iter) {
        int n = 6 + int(rng() % 2);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin() < 0.55) b.add_edge(u, v);
        Graph g = b.build();
        for (int q : {3, 4}) {
            VertexSet t;
            for (int v = 0; v < q; ++v) t.push_back(v);
            // k > n rules the independent-set branch out, so the answer is decisive.
            auto out = tcycle_max(g, t, n + 1);
            int want = oracle_max_cycle(g, t);
            if (out.tag == TCycleOutcome::Tag::Cycle) {
                ++decided;
                CHECK(int(out.embedding->size()) == want);
            } else {
                CHECK(want == 0);
            }
        }
    }
    CHECK(decided > 5);
}

TEST_CASE("pathcover outcomes") {
    GraphBuilder b(4);
    for (int v = 1; v < 4; ++v) b.add_edge(0, v);
    Graph star = b.build();
    auto yes = path_coverable(star, 2, 4);
    REQUIRE(yes.tag == PathCoverOutcome::Tag::Coverable);
    CHECK(yes.cover.size() == 2);
    VerifyArgs args;
    args.k = 4;
    CHECK(certs::verify_certificate("pathcover", star, certs::cover_json(yes.cover, std::nullopt), args).ok);

    auto no = path_coverable(star, 1, 4);
    CHECK(no.tag == PathCoverOutcome::Tag::NotCoverable);

    Graph e3(3);
    CHECK(path_coverable(e3, 3, 1).tag == PathCoverOutcome::Tag::Coverable);
    CHECK(path_coverable(e3, 2, 1).tag == PathCoverOutcome::Tag::NotCoverable);
}

TEST_CASE("hamiltonicity wrappers agree with the oracle on knowns") {
    Graph pet = petersen_graph();
    CHECK(hamiltonian_path(pet, 3).exists);
    CHECK(!hamiltonian_cycle(pet, 3).exists);
    CHECK(!hamiltonian_cycle(Graph(2, {{0, 1}}), 1).exists);
}

TEST_CASE("generator is deterministic and bounds alpha") {
    Graph a = gen_instance({4, 4, 4}, 0.3, 42);
    Graph b = gen_instance({4, 4, 4}, 0.3, 42);
    CHECK(a == b);
    Graph c = gen_instance({4, 4, 4}, 0.3, 43);
    CHECK(!(a == c));
    CHECK(oracles::brute_alpha(a).alpha <= 3);
}
