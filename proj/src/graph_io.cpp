#include "alphaham/graph_io.hpp"

#include <sstream>

#include "json.hpp"

namespace alphaham {

namespace {

std::vector<std::pair<int, std::string>> numbered_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        out.emplace_back(no, line);
    }
    return out;
}

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < -1000000000L || v > 1000000000L) return false;
        out = int(v);
    } catch (...) {
        return false;
    }
    return true;
}

Graph parse_edge_list(const std::string& text) {
    int n = -1;
    std::optional<GraphBuilder> b;
    for (auto& [no, line] : numbered_lines(text)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0)
                throw ParseError("expected vertex count", no);
            b.emplace(n);
            continue;
        }
        int u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw ParseError("expected edge 'u v'", no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", no);
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u) + " (line " + std::to_string(no) + ")");
        b->add_edge(u, v);
    }
    if (n < 0) throw ParseError("empty input", 1);
    return b->build();
}

Graph parse_dimacs(const std::string& text) {
    int n = -1;
    std::optional<GraphBuilder> b;
    for (auto& [no, line] : numbered_lines(text)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", no);
            std::string fmt;
            int m;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0) throw ParseError("malformed problem line", no);
            b.emplace(n);
        } else if (kind == "e") {
            if (n < 0) throw ParseError("edge before problem line", no);
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line", no);
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range", no);
            if (u == v) throw LoopError("loop at vertex " + std::to_string(u - 1) + " (line " + std::to_string(no) + ")");
            b->add_edge(u - 1, v - 1);
        } else {
            throw ParseError("unknown line kind '" + kind + "'", no);
        }
    }
    if (n < 0) throw ParseError("missing problem line", 1);
    return b->build();
}

Graph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what(), 1);
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("expected object with integer field 'n'", 1);
    int n = j["n"].get<int>();
    if (n < 0) throw ParseError("negative vertex count", 1);
    GraphBuilder b(n);
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("'edges' must be an array", 1);
        for (auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("edge entries must be [u,v]", 1);
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", 1);
            if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
            b.add_edge(u, v);
        }
    }
    return b.build();
}

}  // namespace

GraphFormat format_from_name(const std::string& name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "json") return GraphFormat::Json;
    throw ParseError("unknown format '" + name + "'", 0);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Dimacs: return parse_dimacs(text);
        case GraphFormat::Json: return parse_json(text);
    }
    throw ParseError("bad format", 0);
}

Graph parse_graph_auto(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_graph(text, GraphFormat::Json);
        if (c == 'p' || c == 'c') return parse_graph(text, GraphFormat::Dimacs);
        break;
    }
    return parse_graph(text, GraphFormat::EdgeList);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    auto es = g.edges();
    switch (format) {
        case GraphFormat::EdgeList:
            out << g.n() << "\n";
            for (auto [u, v] : es) out << u << " " << v << "\n";
            break;
        case GraphFormat::Dimacs:
            out << "p edge " << g.n() << " " << es.size() << "\n";
            for (auto [u, v] : es) out << "e " << u + 1 << " " << v + 1 << "\n";
            break;
        case GraphFormat::Json: {
            nlohmann::json j;
            j["n"] = g.n();
            auto arr = nlohmann::json::array();
            for (auto [u, v] : es) arr.push_back({u, v});
            j["edges"] = arr;
            out << j.dump() << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace alphaham
