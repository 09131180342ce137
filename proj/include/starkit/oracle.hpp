#pragma once

// Exact ground truth for small star graphs: independence checks, partition
// verification, maximum independent set and chromatic number by exhaustive search.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starkit/graph.hpp"
#include "starkit/partition.hpp"

namespace starkit {

constexpr std::size_t kDefaultSearchCap = 200;

struct IndependenceWitness {
    bool independent = true;
    std::optional<std::pair<Rank, Rank>> conflicting_edge;  // (u, v) with u < v, lexicographically first
};

IndependenceWitness is_independent(const StarGraph& g, std::span<const Rank> set);
/// Same verdict computed from neighbor generation, without a materialized graph.
IndependenceWitness is_independent(const StarGraphParams& params, std::span<const Rank> set);
IndependenceWitness is_independent(const StarGraphParams& params, const VertexSet& set);

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json witness;  // null when there is nothing to show
};

struct VerificationReport {
    std::vector<Check> checks;
    std::size_t parts = 0;
    std::vector<std::size_t> part_sizes;
    std::size_t vertices_covered = 0;

    bool pass() const;
    const Check* find(std::string_view name) const;
    nlohmann::json to_json() const;
};

/// Runs part_count, part_sizes, disjoint, covering, independent, one_per_suffix_class.
VerificationReport verify_partition(const StarGraphParams& params, const MisPartition& partition, unsigned threads = 1);

enum class Quantity { alpha, chi };

struct OracleResult {
    Quantity quantity = Quantity::alpha;
    std::uint64_t value = 0;
    std::vector<Rank> independent_set;  // alpha witness, ascending
    std::vector<int> coloring;          // chi witness, colors 0..value-1 by rank
    std::uint64_t nodes = 0;            // search nodes visited
    std::chrono::duration<double> elapsed{};
};

struct OracleOptions {
    std::size_t search_cap = kDefaultSearchCap;
    /// Optional known independent set used as the initial lower bound.
    std::optional<std::vector<Rank>> seed;
};

/// n!/(n-k+1)!, counted from the suffix classes of the graph (each holds at most one vertex of any independent set).
std::uint64_t upper_bound_clique_cover(const StarGraph& g);

/// Branch-and-bound on ascending rank, pruned by the per-suffix-class bound.
OracleResult alpha_exact(const StarGraph& g, const OracleOptions& options = {});

/// Smallest t >= n-k+1 admitting a proper t-coloring, by saturation-ordered backtracking.
OracleResult chi_exact(const StarGraph& g, const OracleOptions& options = {});

/// First monochromatic edge, if any. Colors must be given for every vertex.
std::optional<std::pair<Rank, Rank>> find_monochromatic_edge(const StarGraph& g, std::span<const int> coloring);

}  // namespace starkit
