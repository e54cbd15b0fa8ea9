#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphaham/applications.hpp"
#include "alphaham/certificates.hpp"
#include "alphaham/connectivity.hpp"
#include "alphaham/graph_io.hpp"
#include "alphaham/oracles.hpp"
#include "alphaham/ramsey.hpp"

namespace py = pybind11;
using namespace alphaham;

namespace {

py::dict embedding_dict(const TMEmbedding& emb) {
    py::dict d;
    d["model_vertices"] = emb.model.vertices;
    d["model_edges"] = emb.model.edges;
    py::dict f;
    for (size_t hv = 0; hv < emb.f.size(); ++hv) f[py::int_(hv)] = emb.f[hv];
    d["terminal_map"] = f;
    d["size"] = emb.model.vertices.size();
    return d;
}

py::dict embed_outcome_dict(const EmbedOutcome& out) {
    py::dict d;
    switch (out.tag) {
        case EmbedOutcome::Tag::Embedding:
            d["outcome"] = "embedding";
            d["embedding"] = embedding_dict(*out.embedding);
            break;
        case EmbedOutcome::Tag::IndependentSet:
            d["outcome"] = "independent_set";
            d["independent_set"] = out.independent;
            break;
        case EmbedOutcome::Tag::Infeasible:
            d["outcome"] = "infeasible";
            break;
    }
    return d;
}

std::vector<std::vector<int>> paths_to_lists(const std::vector<Path>& paths) {
    std::vector<std::vector<int>> out;
    for (const Path& p : paths) out.push_back(p.verts);
    return out;
}

ListAssignment lists_from_dict(const Graph& h, const Graph& g, const py::object& lists) {
    ListAssignment l = trivial_lists(h, g);
    if (!lists.is_none()) {
        for (auto item : py::cast<py::dict>(lists)) {
            int hv = py::cast<int>(item.first);
            if (hv < 0 || hv >= h.n()) throw PreconditionError("list key out of range");
            l[hv] = py::cast<VertexSet>(item.second);
            std::sort(l[hv].begin(), l[hv].end());
        }
    }
    return l;
}

}  // namespace

PYBIND11_MODULE(_alphaham, m) {
    m.doc() = "exact FPT graph algorithms parameterized by the independence number";

    py::register_exception<GuardrailError>(m, "GuardrailError");
    py::register_exception<SizeCap>(m, "SizeCapError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, int v) { g.check_vertex(v); return g.neighbors(v); })
        .def("degree", [](const Graph& g, int v) { g.check_vertex(v); return g.degree(v); })
        .def("is_complete", &Graph::is_complete)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph", [](const std::string& text, const std::string& format) {
        if (format == "auto") return parse_graph_auto(text);
        return parse_graph(text, format_from_name(format));
    }, py::arg("text"), py::arg("format") = "auto");
    m.def("serialize_graph", [](const Graph& g, const std::string& format) {
        return serialize_graph(g, format_from_name(format));
    }, py::arg("graph"), py::arg("format") = "edge-list");

    m.def("connected_components", &connected_components);
    m.def("induced_subgraph", [](const Graph& g, const VertexSet& s) {
        auto r = induced_subgraph(g, s);
        return py::make_tuple(r.graph, r.id_map);
    });
    m.def("is_independent_set", &is_independent_set);
    m.def("is_clique", &is_clique);
    m.def("dissolve", [](const Graph& m_, const VertexSet& t) {
        auto r = dissolve(m_, t);
        py::dict witness;
        for (auto& [e, seq] : r.witness) witness[py::make_tuple(e.first, e.second)] = seq;
        return py::make_tuple(r.graph, r.id_map, witness);
    });

    m.def("vertex_connectivity", [](const Graph& g) {
        auto r = vertex_connectivity(g);
        return py::make_tuple(r.kappa, r.separator ? py::cast(*r.separator) : py::none());
    });
    m.def("is_c_connected", [](const Graph& g, int c) {
        auto [ok, sep] = is_c_connected(g, c);
        return py::make_tuple(ok, sep ? py::cast(*sep) : py::none());
    });
    m.def("menger_fan", [](const Graph& g, int x, const VertexSet& s, int cap) {
        auto fan = menger_fan(g, x, s, cap);
        return paths_to_lists(fan.paths);
    });

    m.def("ramsey_extract", [](const Graph& g, int r, int s) {
        auto out = ramsey_extract(g, r, s);
        return py::make_tuple(out.tag == CliqueOrIS::Tag::Clique ? "clique" : "independent", out.members);
    });

    m.def("gallai_milgram_cover", [](const Graph& g) { return paths_to_lists(gallai_milgram_cover(g)); });
    m.def("below_gm", [](const Graph& g, int k) {
        auto out = below_gm(g, k);
        py::dict d;
        d["paths"] = paths_to_lists(out.cover);
        if (out.independent)
            d["certificate"] = py::dict(py::arg("independent_set") = *out.independent);
        else
            d["certificate"] = "minimum";
        return d;
    }, py::arg("graph"), py::arg("k"));

    m.def("max_list_tm_embedding", [](const Graph& g, const Graph& h, const py::object& lists, int k) {
        return embed_outcome_dict(max_list_tm_embedding(g, h, lists_from_dict(h, g, lists), k));
    }, py::arg("graph"), py::arg("pattern"), py::arg("lists") = py::none(), py::arg("k") = 1);

    m.def("hamiltonian_path", [](const Graph& g, int k, py::object endpoints) {
        std::optional<std::pair<int, int>> ep;
        if (!endpoints.is_none()) ep = py::cast<std::pair<int, int>>(endpoints);
        auto out = hamiltonian_path(g, k, ep);
        py::dict d;
        d["exists"] = out.exists;
        d["k_used"] = out.k_used;
        if (out.embedding) d["embedding"] = embedding_dict(*out.embedding);
        return d;
    }, py::arg("graph"), py::arg("k") = 1, py::arg("endpoints") = py::none());

    m.def("hamiltonian_cycle", [](const Graph& g, int k) {
        auto out = hamiltonian_cycle(g, k);
        py::dict d;
        d["exists"] = out.exists;
        d["k_used"] = out.k_used;
        if (out.embedding) d["embedding"] = embedding_dict(*out.embedding);
        return d;
    }, py::arg("graph"), py::arg("k") = 1);

    m.def("linkage", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs, int k) {
        TerminalPairs tp{pairs};
        EmbedOutcome out = linkage_embedding(g, tp, k);
        py::dict d = embed_outcome_dict(out);
        if (out.tag == EmbedOutcome::Tag::Embedding) {
            d["spanning"] = int(out.embedding->size()) == g.n();
            GraphBuilder hb(2 * tp.l());
            for (int i = 0; i < tp.l(); ++i) hb.add_edge(2 * i, 2 * i + 1);
            Graph h = hb.build();
            d["paths"] = paths_to_lists(linkage_paths_from_model(h, *out.embedding));
        }
        return d;
    }, py::arg("graph"), py::arg("pairs"), py::arg("k") = 1);

    m.def("tcycle", [](const Graph& g, const VertexSet& terminals, int k, int jobs) {
        auto out = tcycle_max(g, terminals, k, jobs);
        py::dict d;
        switch (out.tag) {
            case TCycleOutcome::Tag::Cycle:
                d["outcome"] = "cycle";
                d["embedding"] = embedding_dict(*out.embedding);
                break;
            case TCycleOutcome::Tag::IndependentSet:
                d["outcome"] = "independent_set";
                d["independent_set"] = out.independent;
                break;
            case TCycleOutcome::Tag::Infeasible:
                d["outcome"] = "infeasible";
                break;
        }
        return d;
    }, py::arg("graph"), py::arg("terminals"), py::arg("k") = 1, py::arg("jobs") = 1);

    m.def("brute_alpha", [](const Graph& g) {
        auto r = oracles::brute_alpha(g);
        return py::make_tuple(r.alpha, r.witness);
    });
    m.def("brute_pc", [](const Graph& g) {
        auto r = oracles::brute_pc(g);
        return py::make_tuple(r.pc, paths_to_lists(r.witness));
    });
    m.def("brute_ham", [](const Graph& g, const std::string& mode) {
        auto r = oracles::brute_ham(g, mode == "cycle" ? oracles::HamMode::Cycle : oracles::HamMode::Path);
        return py::make_tuple(r.exists, r.witness ? py::cast(r.witness->verts) : py::none());
    }, py::arg("graph"), py::arg("mode") = "path");

    m.def("gen_instance", &gen_instance, py::arg("clique_sizes"), py::arg("cross_p"), py::arg("seed"));

    m.def("verify_certificate", [](const std::string& problem, const Graph& g, const std::string& cert_json, int k) {
        certs::VerifyArgs args;
        args.k = k;
        auto res = certs::verify_certificate(problem, g, certs::json::parse(cert_json), args);
        return py::make_tuple(res.ok, res.message);
    }, py::arg("problem"), py::arg("graph"), py::arg("cert_json"), py::arg("k") = -1);
}
