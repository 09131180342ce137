#pragma once

// Partition of S(n,k) into n-k+1 maximum independent sets, built by lifting
// the residue-class partition of S(n-k+2, 2) one symbol at a time.

#include <cstdint>
#include <vector>

#include "starkit/graph.hpp"
#include "starkit/perm.hpp"

namespace starkit {

/// Ordered parts; part j-1 holds I_j as ascending ranks in Γ(n,k).
struct MisPartition {
    StarGraphParams params;
    std::vector<std::vector<Rank>> parts;
};

using VertexSet = std::vector<KPerm>;
using Family = std::vector<VertexSet>;  // indexed by j-1

/// One lift level: sets of length-`length` permutations over [ground].
struct ConstructionLevel {
    int length = 0;
    int ground = 0;
    Family sets;                               // each sorted
    std::vector<std::vector<VertexSet>> buckets;  // buckets[j][x-1]; empty at the base level
};

struct ConstructionTrace {
    std::vector<ConstructionLevel> levels;  // base (length 1 or 2) up to k
};

struct LiftResult {
    Family sets;
    std::vector<std::vector<VertexSet>> buckets;  // [j][x-1], x in [new_symbol]
};

/// n singletons {1}, ..., {n}.
MisPartition base_k1(int n);

/// The residue classes { pq : p ≡ q + j (mod m) }, j = 1..m-1. Independent in S(m,2) only for odd m.
Family residue_family(int m);

/// Partition of S(m,2) into m-1 independent sets of size m. The residue classes for odd m;
/// for even m != 4, classes in which every symbol leads exactly once and no set holds both pq
/// and qp, so the family survives any number of lifts. For m = 4 no such family exists and the
/// result is only independent in S(4,2).
Family base_k2(int m);

/// Extends each set by one symbol: new_symbol's bucket appends it to the first-two swap;
/// bucket x < new_symbol appends x after substituting new_symbol for x.
LiftResult lift(const Family& level, int new_symbol);

struct Construction {
    MisPartition partition;
    ConstructionTrace trace;
};

/// Runs base_k1 (k = 1) or base_k2(n-k+2) followed by k-2 lifts. Never materializes the graph.
Construction construct(const StarGraphParams& params, unsigned threads = 1);

/// Ranks a family over Γ(n,k) into a MisPartition (parts sorted, duplicates kept).
MisPartition to_partition(const StarGraphParams& params, const Family& family);

/// The earlier, incorrect construction: I_2 = {12, 23, ..., m1}; each level appends the new
/// symbol to β unchanged and appends x to β with x replaced by the new symbol.
struct WeiLevel {
    int length = 0;
    int ground = 0;
    std::vector<VertexSet> buckets;  // buckets[x-1], x in [ground]
    VertexSet set;                   // union, sorted
};

struct WeiConstruction {
    StarGraphParams params;
    std::vector<WeiLevel> levels;  // base level first
    VertexSet final_set() const { return levels.back().set; }
    /// The single resulting set as a one-part family over Γ(n,k).
    MisPartition as_partition() const;
};

/// Requires k >= 3.
WeiConstruction flawed_construct_wei(const StarGraphParams& params);

}  // namespace starkit
