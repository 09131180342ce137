#pragma once

// File formats: DIMACS edge lists with a .labels companion, JSON adjacency,
// and the JSON partition document shared by `partition` and `verify`.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starkit/graph.hpp"
#include "starkit/oracle.hpp"
#include "starkit/partition.hpp"

namespace starkit::io {

/// "p edge |V| |E|" then "e u v" (1-based, u < v) in ascending order.
void write_dimacs(std::ostream& out, const StarGraph& g);
/// Line i holds the label of DIMACS vertex i.
void write_labels(std::ostream& out, const StarGraph& g, bool compact);
/// "<vertex>: <neighbor> <neighbor> ..." per line.
void write_text(std::ostream& out, const StarGraph& g, bool compact);
nlohmann::json adjacency_json(const StarGraph& g, bool compact);

struct DimacsGraph {
    std::size_t vertices = 0;
    std::size_t declared_edges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based as written
};

/// Throws ArgumentError on a missing header or malformed line.
DimacsGraph read_dimacs(std::istream& in);
std::vector<std::string> read_labels(std::istream& in);

/// { "n", "k", "parts": [[vertex, ...], ...] } with vertices in lexicographic order.
nlohmann::json partition_to_json(const MisPartition& p, bool compact);
/// Accepts canonical or compact vertices; keeps duplicates so verification can flag them.
MisPartition partition_from_json(const nlohmann::json& doc);

nlohmann::json oracle_witness_json(const StarGraph& g, const OracleResult& r, bool compact);

/// Pretty-printed JSON followed by a newline.
std::string dump(const nlohmann::json& doc);

}  // namespace starkit::io
