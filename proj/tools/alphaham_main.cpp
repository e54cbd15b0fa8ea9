// Command-line surface: Hamiltonicity, path cover, linkage and T-cycle
// solvers over the list TM-embedding machinery, plus certificate verification
// and instance generation.
//
// Exit codes: 0 feasible/minimum, 1 infeasible or independence certificate,
// 2 input error, 3 guardrail abort.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "alphaham/applications.hpp"
#include "alphaham/certificates.hpp"
#include "alphaham/graph_io.hpp"
#include "alphaham/oracles.hpp"

using namespace alphaham;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format.empty()) return parse_graph_auto(text);
    return parse_graph(text, format_from_name(format));
}

void write_output(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump() << std::endl;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'", 0);
        out << j.dump() << "\n";
    }
}

TerminalPairs parse_pairs(const std::string& text) {
    TerminalPairs pairs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("pairs must look like 's1:t1,s2:t2'", 0);
        pairs.pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    if (pairs.pairs.empty()) throw ParseError("no pairs given", 0);
    return pairs;
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw ParseError("empty vertex list", 0);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
    return out;
}

struct Common {
    std::string graph_path, format, out_path;
    int k = 1;
    int jobs = 1;
    int64_t max_descriptors = MergeLimits{}.max_descriptors;

    MergeLimits limits() const { return MergeLimits{max_descriptors}; }
};

void add_common(CLI::App* cmd, Common& c, bool with_k = true) {
    cmd->add_option("--graph", c.graph_path, "input graph file")->required();
    cmd->add_option("--format", c.format, "edge-list|dimacs|json (default: auto-detect)");
    cmd->add_option("--out", c.out_path, "write the JSON certificate here instead of stdout");
    if (with_k) cmd->add_option("--k", c.k, "independence parameter (k >= 1)");
    cmd->add_option("--jobs", c.jobs, "worker cap for parallelizable loops");
    cmd->add_option("--max-descriptors", c.max_descriptors, "descriptor enumeration budget");
}

int run(int argc, char** argv) {
    CLI::App app{"exact FPT graph solvers parameterized by the independence number"};
    app.require_subcommand(1);

    Common c;
    std::string endpoints_text, pairs_text, terminals_text, pattern_path, lists_path, cert_path, problem;
    std::string cliques_text = "4,4,4";
    double cross_p = 0.25;
    uint64_t seed = 1;
    int p_paths = 1;

    auto* hampath = app.add_subcommand("hampath", "Hamiltonian path via a spanning K2 embedding");
    add_common(hampath, c);
    hampath->add_option("--endpoints", endpoints_text, "pin the path endpoints, e.g. '0,5'");

    auto* hamcycle = app.add_subcommand("hamcycle", "Hamiltonian cycle via a spanning C3 embedding");
    add_common(hamcycle, c);

    auto* pathcover = app.add_subcommand("pathcover", "cover by at most p vertex-disjoint paths");
    add_common(pathcover, c);
    pathcover->add_option("--p", p_paths, "path budget")->required();

    auto* belowgm = app.add_subcommand("below-gm", "minimum path cover or an alpha(G)-k certificate");
    add_common(belowgm, c);

    auto* linkage = app.add_subcommand("linkage", "Hamiltonian-l-linkage for given terminal pairs");
    add_common(linkage, c);
    linkage->add_option("--pairs", pairs_text, "terminal pairs 's1:t1,s2:t2'")->required();

    auto* tcycle = app.add_subcommand("tcycle", "maximum cycle through all terminals (|T|<3 is padded with free cycle vertices)");
    add_common(tcycle, c);
    tcycle->add_option("--terminals", terminals_text, "terminal list 'a,b,c'")->required();

    auto* embed = app.add_subcommand("embed", "maximum list TM-embedding of a pattern graph");
    add_common(embed, c);
    embed->add_option("--pattern", pattern_path, "pattern graph H")->required();
    embed->add_option("--lists", lists_path, "JSON list assignment {\"0\":[...],...}");

    auto* verify = app.add_subcommand("verify", "re-validate an emitted certificate");
    add_common(verify, c);
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    verify->add_option("--problem", problem, "hampath|hamcycle|pathcover|below-gm|linkage|tcycle|embed")->required();
    verify->add_option("--pairs", pairs_text, "pairs for linkage verification");
    verify->add_option("--terminals", terminals_text, "terminals for tcycle verification");
    verify->add_option("--pattern", pattern_path, "pattern for embed verification");
    verify->add_option("--endpoints", endpoints_text, "endpoints for hampath verification");
    verify->add_option("--p", p_paths, "unused; accepted for symmetry");

    auto* gen = app.add_subcommand("gen", "seeded instance: disjoint cliques plus random cross edges");
    gen->add_option("--cliques", cliques_text, "clique sizes, e.g. '5,5,5'");
    gen->add_option("--cross-p", cross_p, "cross edge probability");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", c.out_path, "output file (default stdout)");
    std::string gen_format = "edge-list";
    gen->add_option("--format", gen_format, "edge-list|dimacs|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        Graph g = gen_instance(parse_int_list(cliques_text), cross_p, seed);
        std::string text = serialize_graph(g, format_from_name(gen_format));
        if (c.out_path.empty())
            std::cout << text;
        else {
            std::ofstream out(c.out_path);
            out << text;
        }
        std::cerr << "n=" << g.n() << " m=" << g.edge_count();
        try {
            std::cerr << " alpha=" << oracles::brute_alpha(g).alpha;
        } catch (const SizeCap&) {
            std::cerr << " alpha=? (beyond oracle cap)";
        }
        std::cerr << "\n";
        return 0;
    }

    Graph g = load_graph(c.graph_path, c.format);
    if (c.k < 1) throw PreconditionError("k must be >= 1");

    if (hampath->parsed() || hamcycle->parsed()) {
        std::optional<std::pair<int, int>> endpoints;
        if (!endpoints_text.empty()) {
            auto vs = parse_vertex_list(endpoints_text);
            if (vs.size() != 2) throw ParseError("--endpoints wants exactly two vertices", 0);
            endpoints = {vs[0], vs[1]};
        }
        HamOutcome out = hampath->parsed() ? hamiltonian_path(g, c.k, endpoints, c.limits())
                                           : hamiltonian_cycle(g, c.k, c.limits());
        if (out.exists) {
            write_output(certs::embedding_json(*out.embedding), c.out_path);
            std::cerr << (hampath->parsed() ? "hamiltonian path" : "hamiltonian cycle") << " found (k escalated to "
                      << out.k_used << ")\n";
            return 0;
        }
        write_output(certs::infeasible_json(), c.out_path);
        std::cerr << "no " << (hampath->parsed() ? "hamiltonian path" : "hamiltonian cycle") << " (decided at k="
                  << out.k_used << ")\n";
        return 1;
    }

    if (pathcover->parsed()) {
        PathCoverOutcome out = path_coverable(g, p_paths, c.k, c.limits());
        switch (out.tag) {
            case PathCoverOutcome::Tag::Coverable:
                write_output(certs::cover_json(out.cover, std::nullopt), c.out_path);
                std::cerr << "coverable: minimum cover has " << out.cover.size() << " paths\n";
                return 0;
            case PathCoverOutcome::Tag::IndependentSet:
                write_output(certs::independent_set_json(out.independent), c.out_path);
                std::cerr << "undecided at this k: independent set of size " << out.independent.size() << "\n";
                return 1;
            case PathCoverOutcome::Tag::NotCoverable:
                write_output(certs::infeasible_json(), c.out_path);
                std::cerr << "not coverable by " << p_paths << " paths\n";
                return 1;
        }
    }

    if (belowgm->parsed()) {
        BelowGMOutcome out = below_gm(g, c.k, c.limits());
        write_output(certs::cover_json(out.cover, out.independent), c.out_path);
        if (out.independent) {
            std::cerr << "cover of " << out.cover.size() << " paths with an independent set of size "
                      << out.independent->size() << "\n";
            return 1;
        }
        std::cerr << "minimum cover of " << out.cover.size() << " paths\n";
        return 0;
    }

    if (linkage->parsed()) {
        TerminalPairs pairs = parse_pairs(pairs_text);
        EmbedOutcome out = linkage_embedding(g, pairs, c.k, c.limits());
        if (out.tag == EmbedOutcome::Tag::Embedding && int(out.embedding->size()) == g.n()) {
            write_output(certs::embedding_json(*out.embedding), c.out_path);
            GraphBuilder hb(2 * pairs.l());
            for (int i = 0; i < pairs.l(); ++i) hb.add_edge(2 * i, 2 * i + 1);
            Graph h = hb.build();
            std::cerr << "hamiltonian " << pairs.l() << "-linkage:";
            for (const Path& p : linkage_paths_from_model(h, *out.embedding)) {
                std::cerr << " [";
                for (size_t i = 0; i < p.verts.size(); ++i) std::cerr << (i ? "-" : "") << p.verts[i];
                std::cerr << "]";
            }
            std::cerr << "\n";
            return 0;
        }
        if (out.tag == EmbedOutcome::Tag::IndependentSet) {
            write_output(certs::independent_set_json(out.independent), c.out_path);
            std::cerr << "independent set of size " << out.independent.size() << "\n";
            return 1;
        }
        write_output(certs::infeasible_json(), c.out_path);
        std::cerr << "no hamiltonian linkage\n";
        return 1;
    }

    if (tcycle->parsed()) {
        VertexSet terminals = parse_vertex_list(terminals_text);
        TCycleOutcome out = tcycle_max(g, terminals, c.k, c.jobs, c.limits());
        switch (out.tag) {
            case TCycleOutcome::Tag::Cycle:
                write_output(certs::embedding_json(*out.embedding), c.out_path);
                std::cerr << "cycle through all terminals, size " << out.embedding->size() << "\n";
                return 0;
            case TCycleOutcome::Tag::IndependentSet:
                write_output(certs::independent_set_json(out.independent), c.out_path);
                std::cerr << "independent set of size " << out.independent.size() << "\n";
                return 1;
            case TCycleOutcome::Tag::Infeasible:
                write_output(certs::infeasible_json(), c.out_path);
                std::cerr << "no cycle through the terminals\n";
                return 1;
        }
    }

    if (embed->parsed()) {
        Graph h = load_graph(pattern_path, c.format);
        ListAssignment lists = trivial_lists(h, g);
        if (!lists_path.empty()) {
            json jl = json::parse(slurp(lists_path));
            for (auto& [key, val] : jl.items()) {
                int hv = std::stoi(key);
                if (hv < 0 || hv >= h.n()) throw ParseError("list key out of range", 0);
                lists[hv] = val.get<std::vector<int>>();
                std::sort(lists[hv].begin(), lists[hv].end());
            }
        }
        EmbedOutcome out = max_list_tm_embedding(g, h, lists, c.k, c.limits());
        switch (out.tag) {
            case EmbedOutcome::Tag::Embedding:
                write_output(certs::embedding_json(*out.embedding), c.out_path);
                std::cerr << "embedding of size " << out.embedding->size() << "\n";
                return 0;
            case EmbedOutcome::Tag::IndependentSet:
                write_output(certs::independent_set_json(out.independent), c.out_path);
                std::cerr << "independent set of size " << out.independent.size() << "\n";
                return 1;
            case EmbedOutcome::Tag::Infeasible:
                write_output(certs::infeasible_json(), c.out_path);
                std::cerr << "no list TM-embedding\n";
                return 1;
        }
    }

    if (verify->parsed()) {
        json cert = json::parse(slurp(cert_path));
        certs::VerifyArgs args;
        args.k = verify->count("--k") ? c.k : -1;
        if (!endpoints_text.empty()) {
            auto vs = parse_vertex_list(endpoints_text);
            args.endpoints = {vs[0], vs[1]};
        }
        std::optional<TerminalPairs> pairs;
        if (!pairs_text.empty()) {
            pairs = parse_pairs(pairs_text);
            args.pairs = pairs;
        }
        std::optional<VertexSet> terms;
        if (!terminals_text.empty()) {
            terms = parse_vertex_list(terminals_text);
            args.terminals = terms;
        }
        Graph pattern;
        ListAssignment lists;
        if (!pattern_path.empty()) {
            pattern = load_graph(pattern_path, c.format);
            args.pattern = &pattern;
            if (!lists_path.empty()) {
                lists = trivial_lists(pattern, g);
                json jl = json::parse(slurp(lists_path));
                for (auto& [key, val] : jl.items()) {
                    lists[std::stoi(key)] = val.get<std::vector<int>>();
                    std::sort(lists[std::stoi(key)].begin(), lists[std::stoi(key)].end());
                }
                args.lists = &lists;
            }
        }
        auto res = certs::verify_certificate(problem, g, cert, args);
        std::cerr << (res.ok ? "valid" : "INVALID: " + res.message) << "\n";
        return res.ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardrailError& e) {
        std::cerr << "guardrail abort: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error&) {
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
