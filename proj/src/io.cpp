#include "starkit/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace starkit::io {

void write_dimacs(std::ostream& out, const StarGraph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.neighbors(u))
            if (v > u) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_labels(std::ostream& out, const StarGraph& g, bool compact) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out << g.vertex(v).to_string(compact) << '\n';
}

void write_text(std::ostream& out, const StarGraph& g, bool compact) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << g.vertex(v).to_string(compact) << ':';
        for (auto u : g.neighbors(v)) out << ' ' << g.vertex(u).to_string(compact);
        out << '\n';
    }
}

nlohmann::json adjacency_json(const StarGraph& g, bool compact) {
    nlohmann::json vertices = nlohmann::json::array();
    nlohmann::json adjacency = nlohmann::json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        vertices.push_back(g.vertex(v).to_string(compact));
        const auto nb = g.neighbors(v);
        adjacency.push_back(std::vector<std::uint32_t>(nb.begin(), nb.end()));
    }
    return {{"n", g.params().n()},
            {"k", g.params().k()},
            {"vertex_count", g.vertex_count()},
            {"edge_count", g.edge_count()},
            {"vertices", std::move(vertices)},
            {"adjacency", std::move(adjacency)}};
}

DimacsGraph read_dimacs(std::istream& in) {
    DimacsGraph out;
    bool header = false;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            std::string kind;
            if (!(fields >> kind >> out.vertices >> out.declared_edges) || kind != "edge")
                throw ArgumentError("malformed DIMACS header at line " + std::to_string(line_no));
            header = true;
        } else if (tag == "e") {
            std::size_t u = 0, v = 0;
            if (!header || !(fields >> u >> v) || u < 1 || v < 1 || u > out.vertices || v > out.vertices)
                throw ArgumentError("malformed DIMACS edge at line " + std::to_string(line_no));
            out.edges.emplace_back(u, v);
        } else {
            throw ArgumentError("unexpected DIMACS line " + std::to_string(line_no));
        }
    }
    if (!header) throw ArgumentError("DIMACS input has no header");
    return out;
}

std::vector<std::string> read_labels(std::istream& in) {
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

nlohmann::json partition_to_json(const MisPartition& p, bool compact) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : p.parts) {
        // rank order is lexicographic order of the permutations
        std::vector<Rank> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        nlohmann::json vertices = nlohmann::json::array();
        for (Rank r : sorted) vertices.push_back(p.params.vertex(r).to_string(compact));
        parts.push_back(std::move(vertices));
    }
    return {{"n", p.params.n()}, {"k", p.params.k()}, {"parts", std::move(parts)}};
}

MisPartition partition_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") || !doc.contains("parts"))
        throw ArgumentError("partition document needs \"n\", \"k\" and \"parts\"");
    if (!doc["n"].is_number_integer() || !doc["k"].is_number_integer() || !doc["parts"].is_array())
        throw ArgumentError("partition document has fields of the wrong type");
    const StarGraphParams params(doc["n"].get<int>(), doc["k"].get<int>());
    MisPartition out{params, {}};
    for (const auto& part : doc["parts"]) {
        if (!part.is_array()) throw ArgumentError("each part must be an array of vertex strings");
        std::vector<Rank> ranks;
        ranks.reserve(part.size());
        for (const auto& v : part) {
            if (!v.is_string()) throw ArgumentError("vertices must be strings");
            const KPerm p = parse_kperm(v.get<std::string>(), params.n());
            if (p.k() != params.k())
                throw ArgumentError("vertex '" + v.get<std::string>() + "' has length " + std::to_string(p.k()) +
                                    ", expected " + std::to_string(params.k()));
            ranks.push_back(params.rank(p));
        }
        std::sort(ranks.begin(), ranks.end());
        out.parts.push_back(std::move(ranks));
    }
    return out;
}

nlohmann::json oracle_witness_json(const StarGraph& g, const OracleResult& r, bool compact) {
    nlohmann::json out{{"n", g.params().n()}, {"k", g.params().k()}};
    if (r.quantity == Quantity::alpha) {
        out["quantity"] = "alpha";
        out["value"] = r.value;
        nlohmann::json set = nlohmann::json::array();
        for (Rank v : r.independent_set) set.push_back(g.vertex(v).to_string(compact));
        out["independent_set"] = std::move(set);
    } else {
        out["quantity"] = "chi";
        out["value"] = r.value;
        nlohmann::json coloring = nlohmann::json::object();
        for (std::size_t v = 0; v < r.coloring.size(); ++v) coloring[g.vertex(v).to_string(compact)] = r.coloring[v] + 1;
        out["coloring"] = std::move(coloring);
    }
    return out;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + '\n'; }

}  // namespace starkit::io
