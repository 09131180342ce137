#pragma once

// The (n,k)-star graph S(n,k): vertices are k-permutations of [n]; p1..pk is
// adjacent to the 1<->i swaps (2 <= i <= k) and to every x p2..pk with x unused.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starkit/perm.hpp"

namespace starkit {

constexpr std::uint64_t kDefaultVertexBudget = 10'000'000;

/// Budget from STARKIT_VERTEX_BUDGET, or kDefaultVertexBudget when unset/invalid.
std::uint64_t default_vertex_budget();

class StarGraphParams {
public:
    StarGraphParams(int n, int k);

    int n() const noexcept { return space_.n(); }
    int k() const noexcept { return space_.k(); }
    int degree() const noexcept { return n() - 1; }
    Rank vertex_count() const noexcept { return space_.size(); }
    std::uint64_t edge_count() const { return vertex_count() * static_cast<std::uint64_t>(degree()) / 2; }

    /// n!/(n-k+1)!: number of suffix classes, which is also α(S(n,k)).
    std::uint64_t suffix_class_count() const { return falling_factorial(n(), k() - 1); }

    const PermSpace& space() const noexcept { return space_; }
    Rank rank(const KPerm& p) const { return space_.rank(p); }
    KPerm vertex(Rank r) const { return space_.unrank(r); }

    friend bool operator==(const StarGraphParams& a, const StarGraphParams& b) noexcept {
        return a.n() == b.n() && a.k() == b.k();
    }

private:
    PermSpace space_;
};

/// All n-1 neighbors of p, in generation order: swaps 2..k, then replacements by ascending x.
std::vector<KPerm> neighbors(const StarGraphParams& params, const KPerm& p);
/// Ranks of the neighbors of vertex r, sorted ascending.
std::vector<Rank> neighbor_ranks(const StarGraphParams& params, Rank r);

bool adjacent(const KPerm& a, const KPerm& b);

struct BuildOptions {
    std::uint64_t vertex_budget = default_vertex_budget();
    unsigned threads = 1;
};

/// Materialized, immutable S(n,k). Adjacency is a flat (n-1)-stride array of sorted neighbor ranks.
class StarGraph {
public:
    using Vertex = std::uint32_t;

    const StarGraphParams& params() const noexcept { return params_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::uint64_t edge_count() const noexcept { return params_.edge_count(); }
    int degree() const noexcept { return params_.degree(); }

    std::span<const Vertex> neighbors(std::size_t v) const noexcept {
        const auto d = static_cast<std::size_t>(degree());
        return {adjacency_.data() + v * d, d};
    }
    bool has_edge(std::size_t u, std::size_t v) const noexcept;

    KPerm vertex(std::size_t v) const { return params_.vertex(v); }

private:
    friend StarGraph build(const StarGraphParams&, const BuildOptions&);
    explicit StarGraph(const StarGraphParams& p) : params_(p), vertex_count_(p.vertex_count()) {}

    StarGraphParams params_;
    std::size_t vertex_count_;
    std::vector<Vertex> adjacency_;
};

/// Throws ResourceError when vertex_count exceeds the budget.
StarGraph build(const StarGraphParams& params, const BuildOptions& options = {});

/// Vertices sharing the suffix p2..pk. For k = 1 there is a single class with an empty suffix.
struct SuffixClass {
    std::vector<Symbol> suffix;
    std::vector<Rank> members;  // ascending
};

/// Groups Γ(n,k) by suffix; classes ordered by the rank of their suffix in Γ(n,k-1).
std::vector<SuffixClass> suffix_classes(const StarGraphParams& params);

struct CliqueCoverResult {
    bool ok = false;
    std::vector<SuffixClass> classes;
    std::optional<std::pair<Rank, Rank>> non_adjacent;  // first failing pair
    std::string detail;
};

/// Every suffix class must contain n-k+1 pairwise adjacent vertices; together they partition V.
CliqueCoverResult check_clique_cover(const StarGraph& g);

struct DecompositionResult {
    bool ok = false;
    int classes_checked = 0;
    std::optional<int> failing_symbol;
    std::optional<std::pair<Rank, Rank>> offending_edge;  // ranks in S(n,k)
    std::string detail;
};

/// Relabels each last-symbol class onto S(n-1,k-1) and compares edge sets with a fresh build.
DecompositionResult check_decomposition(const StarGraph& g);

/// Drops the last symbol i and maps s -> s (s < i) or s-1 (s > i).
KPerm relabel_into_subgraph(const KPerm& p);

}  // namespace starkit
