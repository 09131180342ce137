#include "starkit/partition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

namespace starkit {

namespace {

void sort_set(VertexSet& s) { std::sort(s.begin(), s.end()); }

VertexSet concat(const std::vector<VertexSet>& buckets) {
    VertexSet out;
    for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    sort_set(out);
    return out;
}

std::vector<VertexSet> lift_one(const VertexSet& previous, int new_symbol) {
    std::vector<VertexSet> buckets(new_symbol);
    for (auto& b : buckets) b.reserve(previous.size());
    for (const KPerm& pi : previous) {
        const KPerm wide = pi.widen(new_symbol);
        buckets[new_symbol - 1].push_back(append(swap_first_two(wide), new_symbol));
        for (int x = 1; x < new_symbol; ++x) buckets[x - 1].push_back(append(substitute(wide, x, new_symbol), x));
    }
    return buckets;
}

}  // namespace

MisPartition base_k1(int n) {
    if (n < 2) throw ArgumentError("base_k1 needs n >= 2");
    MisPartition out{StarGraphParams(n, 1), {}};
    for (int j = 1; j <= n; ++j) out.parts.push_back({static_cast<Rank>(j - 1)});
    return out;
}

Family residue_family(int m) {
    if (m < 3) throw ArgumentError("residue_family needs m >= 3");
    Family out(m - 1);
    for (int j = 1; j <= m - 1; ++j) {
        for (int q = 1; q <= m; ++q) {
            const int p = (q + j - 1) % m + 1;
            out[j - 1].push_back(KPerm(m, {p, q}));
        }
        sort_set(out[j - 1]);
    }
    return out;
}

namespace {

// cls[p][q] = index of the set holding pq, 0-based points, 0 on the diagonal.
using Square = std::vector<std::vector<int>>;

Square residue_square(int m) {
    Square cls(m, std::vector<int>(m, 0));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) cls[p][q] = ((p - q) % m + m) % m;
    return cls;
}

// m = 2^e * odd with odd > 1: classes h = m/2 and s = 2^(e-1) trade arcs on
// columns q with q mod 2^e < s, which breaks every 2-cycle of class h.
Square split_square(int m) {
    Square cls = residue_square(m);
    const int h = m / 2, s = (m & -m) / 2, g = m & -m;
    for (int q = 0; q < m; ++q)
        if (q % g < s) {
            cls[(q + s) % m][q] = h;
            cls[(q + h) % m][q] = s;
        }
    return cls;
}

// Fills a unipotent Latin square with cls[p][q] != cls[q][p], most constrained cell first.
Square searched_square(int m) {
    Square cls(m, std::vector<int>(m, 0));
    const std::uint64_t all = ((std::uint64_t{1} << m) - 1) & ~std::uint64_t{1};
    std::vector<std::uint64_t> row(m, all), col(m, all);
    auto options = [&](int p, int q) {
        std::uint64_t a = row[p] & col[q];
        if (cls[q][p] != 0) a &= ~(std::uint64_t{1} << cls[q][p]);
        return a;
    };
    std::function<bool(int)> fill = [&](int remaining) {
        if (remaining == 0) return true;
        int bp = -1, bq = -1, best = 65;
        for (int p = 0; p < m && best > 0; ++p)
            for (int q = 0; q < m; ++q)
                if (p != q && cls[p][q] == 0) {
                    const int c = std::popcount(options(p, q));
                    if (c < best) best = c, bp = p, bq = q;
                    if (c == 0) break;
                }
        for (std::uint64_t a = options(bp, bq); a != 0; a &= a - 1) {
            const int sym = std::countr_zero(a);
            const std::uint64_t bit = std::uint64_t{1} << sym;
            cls[bp][bq] = sym;
            row[bp] ^= bit;
            col[bq] ^= bit;
            if (fill(remaining - 1)) return true;
            cls[bp][bq] = 0;
            row[bp] ^= bit;
            col[bq] ^= bit;
        }
        return false;
    };
    if (!fill(m * (m - 1))) throw std::logic_error("no square of order " + std::to_string(m));
    return cls;
}

Square product_square(const Square& a, const Square& b) {
    const int ma = static_cast<int>(a.size()), mb = static_cast<int>(b.size());
    Square cls(ma * mb, std::vector<int>(ma * mb, 0));
    for (int p = 0; p < ma * mb; ++p)
        for (int q = 0; q < ma * mb; ++q) cls[p][q] = a[p / mb][q / mb] * mb + b[p % mb][q % mb];
    return cls;
}

Square power_of_two_square(int m) {
    if (m <= 32) return searched_square(m);
    return product_square(searched_square(8), power_of_two_square(m / 8));
}

Family family_of(const Square& cls) {
    const int m = static_cast<int>(cls.size());
    Family out(m - 1);
    for (int q = 0; q < m; ++q)
        for (int p = 0; p < m; ++p)
            if (p != q) out[cls[p][q] - 1].push_back(KPerm(m, {p + 1, q + 1}));
    for (auto& set : out) sort_set(set);
    return out;
}

}  // namespace

Family base_k2(int m) {
    if (m < 3) throw ArgumentError("base_k2 needs m >= 3");
    if (m % 2 == 1) return residue_family(m);
    if (m == 4) {
        // No family of order 4 survives a lift; exchange classes 1 and 2 where residue 2
        // pairs pq with qp, which is enough for S(4,2) itself.
        Square cls = residue_square(4);
        for (int q = 2; q < 4; ++q) {
            cls[q - 2][q] = 1;
            cls[(q + 1) % 4][q] = 2;
        }
        return family_of(cls);
    }
    if ((m & (m - 1)) != 0) return family_of(split_square(m));
    return family_of(power_of_two_square(m));
}

LiftResult lift(const Family& level, int new_symbol) {
    if (level.empty()) throw ArgumentError("lift of an empty family");
    const int ground = new_symbol - 1;
    int length = -1;
    for (const auto& set : level)
        for (const auto& p : set) {
            if (p.n() != ground)
                throw ArgumentError("lift input " + p.to_string() + " is over [" + std::to_string(p.n()) + "], expected [" +
                                    std::to_string(ground) + "]");
            if (length < 0) length = p.k();
            if (p.k() != length || length < 2) throw ArgumentError("lift input has inconsistent or short lengths");
        }

    LiftResult out;
    out.sets.resize(level.size());
    out.buckets.resize(level.size());
    for (std::size_t j = 0; j < level.size(); ++j) {
        out.buckets[j] = lift_one(level[j], new_symbol);
        out.sets[j] = concat(out.buckets[j]);
    }
    return out;
}

Construction construct(const StarGraphParams& params, unsigned threads) {
    const int n = params.n(), k = params.k();
    Construction out{MisPartition{params, {}}, {}};
    if (k == 1) {
        out.partition = base_k1(n);
        ConstructionLevel level{1, n, {}, {}};
        for (int j = 1; j <= n; ++j) level.sets.push_back({KPerm(n, {j})});
        out.trace.levels.push_back(std::move(level));
        return out;
    }

    const int base_ground = n - k + 2;
    out.trace.levels.push_back({2, base_ground, base_k2(base_ground), {}});
    const std::size_t part_count = static_cast<std::size_t>(n - k + 1);
    for (int m = base_ground + 1; m <= n; ++m) {
        const Family& previous = out.trace.levels.back().sets;
        ConstructionLevel next{previous.front().front().k() + 1, m, Family(part_count), {}};
        next.buckets.resize(part_count);
        // parts are independent; each thread owns a stride of j
        auto work = [&](std::size_t first, std::size_t stride) {
            for (std::size_t j = first; j < part_count; j += stride) {
                next.buckets[j] = lift_one(previous[j], m);
                next.sets[j] = concat(next.buckets[j]);
            }
        };
        const auto workers = static_cast<std::size_t>(std::clamp<unsigned>(threads, 1, static_cast<unsigned>(part_count)));
        if (workers == 1) {
            work(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
        }
        out.trace.levels.push_back(std::move(next));
    }
    out.partition = to_partition(params, out.trace.levels.back().sets);
    return out;
}

MisPartition to_partition(const StarGraphParams& params, const Family& family) {
    MisPartition out{params, {}};
    out.parts.reserve(family.size());
    for (const auto& set : family) {
        std::vector<Rank> ranks;
        ranks.reserve(set.size());
        for (const auto& p : set) ranks.push_back(params.rank(p));
        std::sort(ranks.begin(), ranks.end());
        out.parts.push_back(std::move(ranks));
    }
    return out;
}

MisPartition WeiConstruction::as_partition() const { return to_partition(params, {final_set()}); }

WeiConstruction flawed_construct_wei(const StarGraphParams& params) {
    const int n = params.n(), k = params.k();
    if (k < 3) throw ArgumentError("the flawed construction is only defined from k = 3");
    WeiConstruction out{params, {}};

    const int m0 = n - k + 2;
    WeiLevel base{2, m0, {}, {}};
    for (int p = 1; p <= m0; ++p) base.set.push_back(KPerm(m0, {p, p % m0 + 1}));
    sort_set(base.set);
    out.levels.push_back(std::move(base));

    for (int m = m0 + 1; m <= n; ++m) {
        const VertexSet& previous = out.levels.back().set;
        WeiLevel next{previous.front().k() + 1, m, std::vector<VertexSet>(m), {}};
        for (const KPerm& beta : previous) {
            const KPerm wide = beta.widen(m);
            next.buckets[m - 1].push_back(append(wide, m));
            // exchanging x with the absent symbol m amounts to substituting m for x
            for (int x = 1; x < m; ++x) next.buckets[x - 1].push_back(append(substitute(wide, x, m), x));
        }
        next.set = concat(next.buckets);
        out.levels.push_back(std::move(next));
    }
    return out;
}

}  // namespace starkit
