#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/pipeline.hpp"

namespace hyperchroma {

// HGT text format: optional '#' comment lines, one data line "k n", then one
// edge per line as strictly increasing space-separated vertex ids. Patterns
// append an optional "root <id>" trailer. The JSON mirror carries fields
// rank, vertex_count, edges.

struct ParsedHgt {
    Hypergraph graph;
    std::optional<int> root;
};

inline ParsedHgt parse_hgt(std::istream& in) {
    std::string line;
    int k = -1, n = -1;
    std::vector<std::vector<int>> edges;
    std::optional<int> root;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (k < 0) {
            if (!(ls >> k >> n) || k < 2 || n < 0)
                throw std::invalid_argument("HGT: bad header at line " + std::to_string(lineno));
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "root") {
            int r;
            if (!(ls >> r)) throw std::invalid_argument("HGT: bad root line");
            root = r;
            continue;
        }
        std::vector<int> edge;
        edge.push_back(std::stoi(first));
        int v;
        while (ls >> v) edge.push_back(v);
        for (std::size_t i = 1; i < edge.size(); ++i)
            if (edge[i] <= edge[i - 1])
                throw std::invalid_argument("HGT: edge not strictly increasing at line " +
                                            std::to_string(lineno));
        edges.push_back(std::move(edge));
    }
    if (k < 0) throw std::invalid_argument("HGT: missing header line");
    return {Hypergraph(n, k, std::move(edges)), root};
}

inline void write_hgt(std::ostream& out, const Hypergraph& g, std::optional<int> root = {}) {
    out << g.rank() << ' ' << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    if (root) out << "root " << *root << '\n';
}

inline nlohmann::json hypergraph_to_json(const Hypergraph& g) {
    return nlohmann::json{
        {"rank", g.rank()}, {"vertex_count", g.vertex_count()}, {"edges", g.edges()}};
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    return Hypergraph(j.at("vertex_count").get<int>(), j.at("rank").get<int>(),
                      j.at("edges").get<std::vector<std::vector<int>>>());
}

inline bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ParsedHgt read_hypergraph_file(const std::string& path) {
    std::string text = slurp(path);
    if (looks_like_json(text)) {
        auto j = nlohmann::json::parse(text);
        ParsedHgt out{hypergraph_from_json(j), std::nullopt};
        if (j.contains("root")) out.root = j.at("root").get<int>();
        return out;
    }
    std::istringstream in(text);
    return parse_hgt(in);
}

inline void write_hypergraph_file(const std::string& path, const Hypergraph& g,
                                  std::optional<int> root = {}) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    if (json) {
        auto j = hypergraph_to_json(g);
        if (root) j["root"] = *root;
        out << j.dump(2) << '\n';
    } else {
        write_hgt(out, g, root);
    }
}

inline Pattern read_pattern_file(const std::string& path, const std::string& name = "") {
    ParsedHgt parsed = read_hypergraph_file(path);
    return Pattern(parsed.graph, name.empty() ? path : name, parsed.root);
}

// Partition results serialize with the vertex-to-part map, per-part
// certificate blocks, stage-2 transversals, the auxiliary graph and seeds.
inline nlohmann::json partition_to_json(const PartitionResult& p) {
    nlohmann::json parts = nlohmann::json::array();
    for (std::size_t i = 0; i < p.part_vertices.size(); ++i) {
        nlohmann::json cert;
        cert["pattern_free"] = p.certificates[i].pattern_free;
        nlohmann::json degrees = nlohmann::json::object(), bounds = nlohmann::json::object();
        for (std::size_t j = 2; j < p.certificates[i].max_degree.size(); ++j) {
            degrees[std::to_string(j)] = p.certificates[i].max_degree[j];
            bounds[std::to_string(j)] = p.certificates[i].degree_bound[j];
        }
        cert["max_degree"] = degrees;
        cert["degree_bound"] = bounds;
        parts.push_back(nlohmann::json{{"vertices", p.part_vertices[i]},
                                       {"edge_count", p.parts[i].edge_count()},
                                       {"certificate", cert}});
    }
    nlohmann::json transversals = nlohmann::json::array();
    for (const auto& t : p.transversals)
        transversals.push_back(nlohmann::json{{"u", t.u},
                                              {"pattern", t.pattern_index},
                                              {"K", t.hitting_set},
                                              {"constructive", t.constructive}});
    nlohmann::json aux = nlohmann::json::array();
    for (const auto& e : p.aux_edges) aux.push_back(nlohmann::json::array({e[0], e[1]}));
    return nlohmann::json{{"colors", p.color_count},
                          {"epsilon", p.epsilon},
                          {"delta", p.delta_used},
                          {"seed", p.seed},
                          {"pattern_roots", p.pattern_roots},
                          {"part_of", p.part_of},
                          {"parts", parts},
                          {"transversals", transversals},
                          {"aux_edges", aux},
                          {"part_count_bound", p.part_count_bound}};
}

inline nlohmann::json recursion_trace_to_json(const FullPartitionResult& r) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& step : r.trace) {
        nlohmann::json rj = nlohmann::json::object();
        for (const auto& [jl, val] : step.r)
            rj[std::to_string(jl.first) + "," + std::to_string(jl.second)] = val;
        trace.push_back(nlohmann::json{{"t", step.t}, {"d", step.d}, {"r", rj}, {"s", step.s}});
    }
    return trace;
}

// The readable core of a serialized partition, enough to audit it offline.
struct PartitionSummary {
    int color_count = 0;
    double epsilon = 0;
    std::uint64_t seed = 0;
    std::vector<int> part_of;
    std::vector<std::vector<int>> part_vertices;
    std::vector<char> pattern_free;
};

inline PartitionSummary partition_from_json(const nlohmann::json& j) {
    PartitionSummary s;
    s.color_count = j.at("colors").get<int>();
    s.epsilon = j.at("epsilon").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    s.part_of = j.at("part_of").get<std::vector<int>>();
    for (const auto& part : j.at("parts")) {
        s.part_vertices.push_back(part.at("vertices").get<std::vector<int>>());
        s.pattern_free.push_back(part.at("certificate").at("pattern_free").get<bool>() ? 1 : 0);
    }
    return s;
}

}  // namespace hyperchroma
