#include "doctest.h"

#include <numeric>
#include <random>

#include "alphaham/connectivity.hpp"
#include "alphaham/linkage.hpp"
#include "alphaham/oracles.hpp"
#include "support/graph_gen.hpp"

using namespace alphaham;

TEST_CASE("terminal normalization") {
    Graph k4 = complete_graph(4);
    TerminalPairs distinct{{{0, 1}, {2, 3}}};
    auto tw = normalize_terminals(k4, distinct);
    CHECK(tw.graph == k4);
    CHECK(tw.pairs.pairs == distinct.pairs);

    TerminalPairs repeat{{{0, 1}, {0, 2}}};
    auto tw2 = normalize_terminals(k4, repeat);
    CHECK(tw2.graph.n() == 5);
    CHECK(tw2.pairs.pairs[0].first != tw2.pairs.pairs[1].first);
    CHECK(tw2.orig_of[tw2.pairs.pairs[1].first] == 0);
    // true twins: adjacent to each other and with equal closed neighborhoods
    int a = tw2.pairs.pairs[0].first, b = tw2.pairs.pairs[1].first;
    CHECK(tw2.graph.adjacent(a, b));
    for (int v = 0; v < tw2.graph.n(); ++v)
        if (v != a && v != b) CHECK(tw2.graph.adjacent(a, v) == tw2.graph.adjacent(b, v));

    CHECK_THROWS_AS(normalize_terminals(k4, TerminalPairs{{{1, 1}}}), DegeneratePair);
}

TEST_CASE("twin-graph independent sets map back at full size") {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = testsupport::random_graph(6, 0.4, rng);
        TerminalPairs pairs{{{0, 1}, {0, 2}, {1, 3}}};
        auto tw = normalize_terminals(g, pairs);
        auto is = oracles::brute_alpha(tw.graph);
        VertexSet mapped;
        for (int v : is.witness) mapped.push_back(tw.orig_of[v]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        CHECK(int(mapped.size()) == is.alpha);  // twins are adjacent, no copies collapse
        CHECK(is_independent_set(g, mapped));
        CHECK(is.alpha == oracles::brute_alpha(g).alpha);
    }
}

TEST_CASE("brute force linkage examples") {
    // whole path
    Graph p4 = path_graph(4);
    auto lk = brute_force_linkage(p4, TerminalPairs{{{0, 3}}});
    REQUIRE(lk.has_value());
    CHECK(lk->paths[0].verts == std::vector<int>{0, 1, 2, 3});

    // crossing pairs on C4 are infeasible
    Graph c4 = cycle_graph(4);
    CHECK(!brute_force_linkage(c4, TerminalPairs{{{0, 2}, {1, 3}}}).has_value());

    // K4 with two disjoint pairs: direct edges
    auto lk2 = brute_force_linkage(complete_graph(4), TerminalPairs{{{0, 1}, {2, 3}}});
    REQUIRE(lk2.has_value());
    std::string why;
    CHECK(validate_linkage(complete_graph(4), *lk2, TerminalPairs{{{0, 1}, {2, 3}}}, &why));
}

TEST_CASE("edge-subset enumeration and backtracking search agree on tiny graphs") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 4 + int(rng() % 3);
        Graph g = testsupport::random_graph(n, 0.5, rng);
        if (g.edge_count() > 12) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        TerminalPairs pairs{{{perm[0], perm[1]}, {perm[2], perm[3]}}};
        bool via_subsets = brute_force_linkage_edge_subsets(g, pairs).has_value();
        auto lk = brute_force_linkage_backtracking(g, pairs);
        CHECK(lk.has_value() == via_subsets);
        if (lk) {
            std::string why;
            CHECK(validate_linkage(g, *lk, pairs, &why));
        }
    }
}

TEST_CASE("disjoint paths or independent set on complete graphs") {
    Graph k20 = complete_graph(20);
    TerminalPairs pairs{{{0, 1}, {2, 3}}};
    auto out = disjoint_paths_or_is(k20, 3, pairs);
    REQUIRE(out.tag == LinkOutcome::Tag::Linkage);
    std::string why;
    CHECK(validate_linkage(k20, out.linkage, pairs, &why));
}

TEST_CASE("disjoint paths with shared terminals") {
    Graph k12 = complete_graph(12);
    TerminalPairs pairs{{{0, 1}, {0, 2}}};  // 0 repeats across pairs
    auto out = disjoint_paths_or_is(k12, 2, pairs);
    REQUIRE(out.tag == LinkOutcome::Tag::Linkage);
    std::string why;
    CHECK(validate_linkage(k12, out.linkage, pairs, &why));
}

TEST_CASE("connectivity precondition is enforced") {
    CHECK_THROWS_AS(disjoint_paths_or_is(cycle_graph(8), 2, TerminalPairs{{{0, 4}}}), ConnectivityError);
}

TEST_CASE("clique route on dense non-complete graphs") {
    // Complement of a perfect matching on 24 vertices: 22-connected, far from
    // complete, alpha = 2. With k = 2 the Ramsey branch may return either an
    // independent set (a matching pair) or a clique route; both must validate.
    int n = 24;
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1)) b.add_edge(u, v);
    Graph g = b.build();
    TerminalPairs pairs{{{0, 5}, {8, 13}}};
    REQUIRE(meets_connectivity(g, 20));
    auto out = disjoint_paths_or_is(g, 2, pairs);
    if (out.tag == LinkOutcome::Tag::Linkage) {
        std::string why;
        CHECK(validate_linkage(g, out.linkage, pairs, &why));
    } else {
        CHECK(out.independent.size() == 2);
        CHECK(is_independent_set(g, out.independent));
    }

    // With k large enough that no independent set of size k exists, the clique
    // route is forced.
    auto out2 = disjoint_paths_or_is(g, 3, pairs);
    REQUIRE(out2.tag == LinkOutcome::Tag::Linkage);
    std::string why2;
    CHECK(validate_linkage(g, out2.linkage, pairs, &why2));
}

TEST_CASE("spanning lemma on complete hosts") {
    Graph k6 = complete_graph(6);
    Graph k2(2, {{0, 1}});
    SpanningStats st;
    auto out = spanning_embedding_or_is(k2, k6, {0, 5}, 2, &st);
    REQUIRE(std::holds_alternative<TMEmbedding>(out));
    const auto& emb = std::get<TMEmbedding>(out);
    CHECK(int(emb.size()) == 6);
    auto rep = validate_tm_embedding(k2, k6, emb.model, emb.f);
    CHECK(rep.ok);
    CHECK(st.enlargement_rounds <= 6);
}

TEST_CASE("spanning lemma rejects undersized hosts") {
    // K6 minus a perfect matching is 4-connected and not complete; the
    // requirement max{k+2,10}*3 = 30 is far above it.
    GraphBuilder b(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u % 2 == 0 && v == u + 1)) b.add_edge(u, v);
    Graph g = b.build();
    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(spanning_embedding_or_is(k2, g, {0, 1}, 1), ConnectivityError);
}

TEST_CASE("spanning lemma with isolated pattern vertices") {
    Graph h(3, {{0, 1}});  // one isolated vertex
    Graph k7 = complete_graph(7);
    auto out = spanning_embedding_or_is(h, k7, {0, 3, 6}, 2);
    REQUIRE(std::holds_alternative<TMEmbedding>(out));
    const auto& emb = std::get<TMEmbedding>(out);
    CHECK(int(emb.size()) == 7);
    auto rep = validate_tm_embedding(h, k7, emb.model, emb.f);
    CHECK(rep.ok);
}

TEST_CASE("spanning lemma on clique blow-ups returns a spanning model or a k-IS") {
    std::mt19937_64 rng(61);
    Graph k2(2, {{0, 1}});
    for (int iter = 0; iter < 12; ++iter) {
        // complete multipartite: parts of size 10, 3-4 parts -> kappa = n - 10 >= 30
        int parts = 4 + int(rng() % 2);
        int n = parts * 10 + int(rng() % 8);
        std::vector<int> part(n);
        for (int v = 0; v < n; ++v) part[v] = v % parts;
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part[u] != part[v]) b.add_edge(u, v);
        Graph g = b.build();
        int s = int(rng() % n), t = int((s + 1 + rng() % (n - 1)) % n);
        if (s == t) continue;
        SpanningStats st;
        auto out = spanning_embedding_or_is(k2, g, {s, t}, 2, &st);
        if (std::holds_alternative<TMEmbedding>(out)) {
            const auto& emb = std::get<TMEmbedding>(out);
            CHECK(int(emb.size()) == g.n());
            CHECK(validate_tm_embedding(k2, g, emb.model, emb.f).ok);
        } else {
            const auto& is = std::get<VertexSet>(out);
            CHECK(is.size() == 2);
            CHECK(is_independent_set(g, is));
        }
        CHECK(st.enlargement_rounds <= g.n());
    }
}

TEST_CASE("chvatal-erdos sanity: alpha below kappa+2 forces a hamiltonian path") {
    std::mt19937_64 rng(67);
    int tested = 0;
    for (int iter = 0; iter < 400 && tested < 50; ++iter) {
        Graph g = testsupport::random_graph(5 + int(rng() % 4), 0.75, rng);
        if (!is_connected(g)) continue;
        int kappa = vertex_connectivity(g).kappa;
        int alpha = oracles::brute_alpha(g).alpha;
        if (alpha >= kappa + 2) continue;
        ++tested;
        CHECK(oracles::brute_ham(g, oracles::HamMode::Path).exists);
    }
    CHECK(tested > 0);
}
