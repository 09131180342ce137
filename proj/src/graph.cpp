#include "starkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <thread>

namespace starkit {

std::uint64_t default_vertex_budget() {
    if (const char* env = std::getenv("STARKIT_VERTEX_BUDGET")) {
        std::uint64_t value = 0;
        const char* end = env + std::char_traits<char>::length(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc{} && ptr == end && value > 0) return value;
    }
    return kDefaultVertexBudget;
}

StarGraphParams::StarGraphParams(int n, int k) : space_(n, k) {}

std::vector<KPerm> neighbors(const StarGraphParams& params, const KPerm& p) {
    if (p.n() != params.n() || p.k() != params.k())
        throw ArgumentError("vertex " + p.to_string() + " does not belong to S(" + std::to_string(params.n()) + "," +
                            std::to_string(params.k()) + ")");
    std::vector<KPerm> out;
    out.reserve(params.degree());
    for (int i = 2; i <= p.k(); ++i) out.push_back(swap_first(p, i));
    for (int x = 1; x <= p.n(); ++x)
        if (!p.contains(x)) out.push_back(replace_first(p, x));
    return out;
}

std::vector<Rank> neighbor_ranks(const StarGraphParams& params, Rank r) {
    const auto nbrs = neighbors(params, params.vertex(r));
    std::vector<Rank> out;
    out.reserve(nbrs.size());
    for (const auto& q : nbrs) out.push_back(params.rank(q));
    std::sort(out.begin(), out.end());
    return out;
}

bool adjacent(const KPerm& a, const KPerm& b) {
    if (a.n() != b.n() || a.k() != b.k() || a == b) return false;
    int diffs = 0;
    int where = -1;
    for (int t = 0; t < a.k(); ++t)
        if (a[t] != b[t]) {
            ++diffs;
            if (t > 0) where = t;
        }
    if (diffs == 1) return a[0] != b[0];  // residual edge: only the first symbol differs
    return diffs == 2 && a[0] == b[where] && b[0] == a[where];
}

bool StarGraph::has_edge(std::size_t u, std::size_t v) const noexcept {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), static_cast<Vertex>(v));
}

StarGraph build(const StarGraphParams& params, const BuildOptions& options) {
    const std::uint64_t count = params.vertex_count();
    const std::uint64_t budget = std::min<std::uint64_t>(options.vertex_budget, std::numeric_limits<StarGraph::Vertex>::max());
    if (count > budget)
        throw ResourceError("S(" + std::to_string(params.n()) + "," + std::to_string(params.k()) + ") needs " +
                                std::to_string(count) + " vertices, budget is " + std::to_string(budget),
                            count);

    StarGraph g(params);
    const auto d = static_cast<std::size_t>(params.degree());
    g.adjacency_.resize(count * d);

    auto fill = [&](std::uint64_t begin, std::uint64_t end, std::uint64_t& forward, std::uint64_t& backward) {
        for (std::uint64_t v = begin; v < end; ++v) {
            const auto nb = neighbor_ranks(params, v);
            for (std::size_t t = 0; t < d; ++t) {
                g.adjacency_[v * d + t] = static_cast<StarGraph::Vertex>(nb[t]);
                if (nb[t] > v) ++forward;
                if (nb[t] < v) ++backward;
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count / 1024 + 1)));
    std::vector<std::uint64_t> forward(threads, 0), backward(threads, 0);
    if (threads == 1) {
        fill(0, count, forward[0], backward[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = std::min(count, t * chunk), hi = std::min(count, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { fill(lo, hi, forward[t], backward[t]); });
        }
    }

    std::uint64_t up = 0, down = 0;
    for (unsigned t = 0; t < threads; ++t) {
        up += forward[t];
        down += backward[t];
    }
    // neighbor lists are distinct and loop-free, so up + down = |V|(n-1); symmetry forces up = down
    if (up != params.edge_count() || down != params.edge_count())
        throw std::logic_error("edge accounting mismatch building S(" + std::to_string(params.n()) + "," +
                               std::to_string(params.k()) + ")");
    return g;
}

std::vector<SuffixClass> suffix_classes(const StarGraphParams& params) {
    const int n = params.n(), k = params.k();
    if (k == 1) {
        SuffixClass all;
        for (Rank r = 0; r < params.vertex_count(); ++r) all.members.push_back(r);
        return {std::move(all)};
    }
    const PermSpace suffixes(n, k - 1);
    std::vector<SuffixClass> classes(suffixes.size());
    for (Rank s = 0; s < suffixes.size(); ++s) {
        const KPerm alpha = suffixes.unrank(s);
        classes[s].suffix.assign(alpha.symbols().begin(), alpha.symbols().end());
        std::vector<int> symbols(k);
        std::copy(alpha.symbols().begin(), alpha.symbols().end(), symbols.begin() + 1);
        for (int x = 1; x <= n; ++x) {
            if (alpha.contains(x)) continue;
            symbols[0] = x;
            classes[s].members.push_back(params.rank(KPerm(n, symbols)));
        }
        std::sort(classes[s].members.begin(), classes[s].members.end());
    }
    return classes;
}

CliqueCoverResult check_clique_cover(const StarGraph& g) {
    const auto& params = g.params();
    if (params.k() < 2) throw ArgumentError("clique cover check needs k >= 2");
    CliqueCoverResult out;
    out.classes = suffix_classes(params);
    const auto class_size = static_cast<std::size_t>(params.n() - params.k() + 1);

    std::vector<int> hits(g.vertex_count(), 0);
    for (const auto& cls : out.classes) {
        if (cls.members.size() != class_size) {
            out.detail = "suffix class of size " + std::to_string(cls.members.size()) + ", expected " +
                         std::to_string(class_size);
            return out;
        }
        for (std::size_t a = 0; a < cls.members.size(); ++a) {
            ++hits[cls.members[a]];
            for (std::size_t b = a + 1; b < cls.members.size(); ++b)
                if (!g.has_edge(cls.members[a], cls.members[b])) {
                    out.non_adjacent = std::pair{cls.members[a], cls.members[b]};
                    out.detail = g.vertex(cls.members[a]).to_string() + " and " + g.vertex(cls.members[b]).to_string() +
                                 " share a suffix but are not adjacent";
                    return out;
                }
        }
    }
    if (out.classes.size() != params.suffix_class_count()) {
        out.detail = "found " + std::to_string(out.classes.size()) + " suffix classes, expected " +
                     std::to_string(params.suffix_class_count());
        return out;
    }
    for (std::size_t v = 0; v < hits.size(); ++v)
        if (hits[v] != 1) {
            out.detail = "vertex " + g.vertex(v).to_string() + " lies in " + std::to_string(hits[v]) + " suffix classes";
            return out;
        }
    out.ok = true;
    return out;
}

KPerm relabel_into_subgraph(const KPerm& p) {
    const int dropped = p.last();
    std::vector<int> symbols;
    symbols.reserve(p.k() - 1);
    for (int t = 0; t + 1 < p.k(); ++t) symbols.push_back(p[t] < dropped ? p[t] : p[t] - 1);
    return KPerm(p.n() - 1, symbols);
}

DecompositionResult check_decomposition(const StarGraph& g) {
    const auto& params = g.params();
    if (params.k() < 2) throw ArgumentError("decomposition check needs k >= 2");
    DecompositionResult out;
    const StarGraphParams sub_params(params.n() - 1, params.k() - 1);
    const StarGraph sub = build(sub_params, {.vertex_budget = std::numeric_limits<std::uint64_t>::max(), .threads = 1});

    auto fail = [&](int symbol, Rank u, Rank v, std::string why) {
        out.failing_symbol = symbol;
        out.offending_edge = std::pair{u, v};
        out.detail = "class " + std::to_string(symbol) + ": " + std::move(why);
        return out;
    };

    for (int i = 1; i <= params.n(); ++i) {
        std::vector<Rank> cls;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (g.vertex(v).last() == i) cls.push_back(v);
        if (cls.size() != sub.vertex_count()) {
            out.failing_symbol = i;
            out.detail = "class " + std::to_string(i) + " has " + std::to_string(cls.size()) + " vertices, expected " +
                         std::to_string(sub.vertex_count());
            return out;
        }
        // relabeling must be a bijection onto S(n-1,k-1)
        std::vector<Rank> image(g.vertex_count(), 0);
        std::vector<bool> covered(sub.vertex_count(), false);
        for (Rank v : cls) {
            image[v] = sub_params.rank(relabel_into_subgraph(g.vertex(v)));
            if (covered[image[v]]) return fail(i, v, v, "relabeling is not injective");
            covered[image[v]] = true;
        }
        for (Rank u : cls) {
            std::vector<Rank> mapped;
            for (auto v : g.neighbors(u))
                if (g.vertex(v).last() == i) mapped.push_back(image[v]);
            std::sort(mapped.begin(), mapped.end());
            const auto expected = sub.neighbors(image[u]);
            if (mapped.size() != expected.size() || !std::equal(mapped.begin(), mapped.end(), expected.begin())) {
                // report the first edge present on one side only
                for (auto v : g.neighbors(u))
                    if (g.vertex(v).last() == i && !sub.has_edge(image[u], image[v]))
                        return fail(i, u, v, "induced edge has no counterpart in S(n-1,k-1)");
                return fail(i, u, u, "vertex " + g.vertex(u).to_string() + " is missing an induced edge");
            }
        }
        ++out.classes_checked;
    }
    out.ok = true;
    return out;
}

}  // namespace starkit
