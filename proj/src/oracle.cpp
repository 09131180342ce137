#include "starkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <thread>

namespace starkit {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Rank> sorted_unique(std::span<const Rank> set, Rank limit) {
    std::vector<Rank> out(set.begin(), set.end());
    for (Rank r : out)
        if (r >= limit) throw ArgumentError("vertex rank " + std::to_string(r) + " outside the graph");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename NeighborsOf>
IndependenceWitness first_conflict(const std::vector<Rank>& members, NeighborsOf&& neighbors_of) {
    for (Rank u : members) {
        for (Rank v : neighbors_of(u)) {  // ascending
            if (v <= u) continue;
            if (std::binary_search(members.begin(), members.end(), v)) return {false, std::pair{u, v}};
        }
    }
    return {};
}

class Bits {
public:
    explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    void subtract(const Bits& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    }
    bool intersects(const Bits& other) const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w]) return true;
        return false;
    }
    std::optional<std::size_t> first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }

private:
    std::vector<std::uint64_t> words_;
};

void check_cap(const StarGraph& g, const OracleOptions& options, std::string_view what, std::string_view formula) {
    if (g.vertex_count() > options.search_cap)
        throw ResourceError(std::string(what) + " search on " + std::to_string(g.vertex_count()) +
                                " vertices exceeds the cap of " + std::to_string(options.search_cap) +
                                "; raise the cap or use the closed form " + std::string(formula),
                            g.vertex_count());
}

class IndependentSetSearch {
public:
    IndependentSetSearch(const StarGraph& g, std::uint64_t upper_bound) : n_(g.vertex_count()), target_(upper_bound) {
        closed_.assign(n_, Bits(n_));
        for (std::size_t v = 0; v < n_; ++v) {
            closed_[v].set(v);
            for (auto u : g.neighbors(v)) closed_[v].set(u);
        }
        for (const auto& cls : suffix_classes(g.params())) {
            Bits mask(n_);
            for (Rank r : cls.members) mask.set(r);
            classes_.push_back(std::move(mask));
        }
    }

    void seed(std::vector<Rank> set) {
        if (set.size() > best_.size()) best_ = std::move(set);
    }

    std::vector<Rank> greedy() const {
        Bits open(n_);
        for (std::size_t v = 0; v < n_; ++v) open.set(v);
        std::vector<Rank> out;
        while (auto v = open.first()) {
            out.push_back(*v);
            open.subtract(closed_[*v]);
        }
        return out;
    }

    void run() {
        Bits open(n_);
        for (std::size_t v = 0; v < n_; ++v) open.set(v);
        std::vector<Rank> chosen;
        descend(open, chosen);
    }

    const std::vector<Rank>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // undecided classes contribute 1; classes with everything excluded contribute 0
    std::uint64_t bound(const Bits& open, std::size_t chosen) const {
        std::uint64_t live = 0;
        for (const auto& cls : classes_)
            if (cls.intersects(open)) ++live;
        return chosen + live;
    }

    void descend(Bits& open, std::vector<Rank>& chosen) {
        ++nodes_;
        if (best_.size() >= target_) return;
        const auto v = open.first();
        if (!v) {
            if (chosen.size() > best_.size()) best_ = chosen;
            return;
        }
        if (bound(open, chosen.size()) <= best_.size()) return;

        Bits include = open;
        include.subtract(closed_[*v]);
        chosen.push_back(*v);
        descend(include, chosen);
        chosen.pop_back();

        open.reset(*v);
        descend(open, chosen);
    }

    std::size_t n_;
    std::uint64_t target_;
    std::vector<Bits> closed_;
    std::vector<Bits> classes_;
    std::vector<Rank> best_;
    std::uint64_t nodes_ = 0;
};

class ColoringSearch {
public:
    ColoringSearch(const StarGraph& g, int colors)
        : g_(g), n_(g.vertex_count()), t_(colors), color_(n_, -1), forbid_(n_ * colors, 0), saturation_(n_, 0),
          free_degree_(n_, g.degree()) {}

    /// Colors the suffix class of vertex 0 with 0, 1, ... in rank order.
    bool precolor(const std::vector<Rank>& clique) {
        for (std::size_t c = 0; c < clique.size(); ++c) {
            if (static_cast<int>(c) >= t_ || forbid_[clique[c] * t_ + c]) return false;
            assign(clique[c], static_cast<int>(c));
        }
        return true;
    }

    bool run() { return descend(); }
    const std::vector<int>& coloring() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void assign(std::size_t v, int c) {
        color_[v] = c;
        used_ = std::max(used_, c + 1);
        ++colored_;
        for (auto u : g_.neighbors(v)) {
            if (forbid_[u * t_ + c]++ == 0) ++saturation_[u];
            --free_degree_[u];
        }
    }

    void unassign(std::size_t v, int c, int previous_used) {
        color_[v] = -1;
        used_ = previous_used;
        --colored_;
        for (auto u : g_.neighbors(v)) {
            if (--forbid_[u * t_ + c] == 0) --saturation_[u];
            ++free_degree_[u];
        }
    }

    // most saturated, then most uncolored neighbors, then lowest rank
    std::size_t pick() const {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            if (best == n_ || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && free_degree_[v] > free_degree_[best]))
                best = v;
        }
        return best;
    }

    bool descend() {
        ++nodes_;
        if (colored_ == n_) return true;
        const std::size_t v = pick();
        if (saturation_[v] >= t_) return false;
        const int previous_used = used_;
        const int limit = std::min(t_, used_ + 1);  // a fresh color is interchangeable with any other fresh one
        for (int c = 0; c < limit; ++c) {
            if (forbid_[v * t_ + c]) continue;
            assign(v, c);
            if (descend()) return true;
            unassign(v, c, previous_used);
        }
        return false;
    }

    const StarGraph& g_;
    std::size_t n_;
    int t_;
    std::vector<int> color_;
    std::vector<int> forbid_;
    std::vector<int> saturation_;
    std::vector<int> free_degree_;
    std::size_t colored_ = 0;
    int used_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IndependenceWitness is_independent(const StarGraph& g, std::span<const Rank> set) {
    const auto members = sorted_unique(set, g.vertex_count());
    return first_conflict(members, [&](Rank u) {
        const auto nb = g.neighbors(u);
        return std::vector<Rank>(nb.begin(), nb.end());
    });
}

IndependenceWitness is_independent(const StarGraphParams& params, std::span<const Rank> set) {
    const auto members = sorted_unique(set, params.vertex_count());
    return first_conflict(members, [&](Rank u) { return neighbor_ranks(params, u); });
}

IndependenceWitness is_independent(const StarGraphParams& params, const VertexSet& set) {
    std::vector<Rank> ranks;
    ranks.reserve(set.size());
    for (const auto& p : set) ranks.push_back(params.rank(p));
    return is_independent(params, std::span<const Rank>(ranks));
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json out;
    out["summary"] = pass() ? "pass" : "fail";
    out["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.is_null()) entry["witness"] = c.witness;
        out["checks"].push_back(std::move(entry));
    }
    out["counts"] = {{"parts", parts}, {"part_sizes", part_sizes}, {"vertices_covered", vertices_covered}};
    return out;
}

VerificationReport verify_partition(const StarGraphParams& params, const MisPartition& partition, unsigned threads) {
    if (!(partition.params == params))
        throw ArgumentError("partition is for S(" + std::to_string(partition.params.n()) + "," +
                            std::to_string(partition.params.k()) + "), expected S(" + std::to_string(params.n()) + "," +
                            std::to_string(params.k()) + ")");
    const auto& parts = partition.parts;
    const Rank vertex_count = params.vertex_count();
    auto label = [&](Rank r) { return params.vertex(r).to_string(); };
    for (const auto& part : parts)
        for (Rank r : part)
            if (r >= vertex_count) throw ArgumentError("vertex rank " + std::to_string(r) + " outside the graph");

    VerificationReport report;
    report.parts = parts.size();
    for (const auto& part : parts) report.part_sizes.push_back(part.size());

    const auto expected_parts = static_cast<std::size_t>(params.n() - params.k() + 1);
    {
        Check c{"part_count", parts.size() == expected_parts, nullptr};
        if (!c.pass) c.witness = {{"expected", expected_parts}, {"actual", parts.size()}};
        report.checks.push_back(std::move(c));
    }
    {
        const std::uint64_t expected = params.suffix_class_count();
        Check c{"part_sizes", true, nullptr};
        for (std::size_t j = 0; j < parts.size() && c.pass; ++j)
            if (parts[j].size() != expected) {
                c.pass = false;
                c.witness = {{"part", j + 1}, {"expected", expected}, {"actual", parts[j].size()}};
            }
        report.checks.push_back(std::move(c));
    }

    std::vector<std::uint32_t> occurrences(vertex_count, 0);
    for (const auto& part : parts)
        for (Rank r : part) ++occurrences[r];
    {
        Check c{"disjoint", true, nullptr};
        for (Rank r = 0; r < vertex_count && c.pass; ++r)
            if (occurrences[r] > 1) {
                c.pass = false;
                nlohmann::json in_parts = nlohmann::json::array();
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    const auto hits = std::count(parts[j].begin(), parts[j].end(), r);
                    for (long h = 0; h < hits; ++h) in_parts.push_back(j + 1);
                }
                c.witness = {{"vertex", label(r)}, {"parts", in_parts}};
            }
        report.checks.push_back(std::move(c));
    }
    {
        Check c{"covering", true, nullptr};
        std::size_t covered = 0;
        std::optional<Rank> missing;
        for (Rank r = 0; r < vertex_count; ++r) {
            if (occurrences[r] > 0)
                ++covered;
            else if (!missing)
                missing = r;
        }
        report.vertices_covered = covered;
        if (missing) {
            c.pass = false;
            c.witness = {{"first_missing", label(*missing)}, {"covered", covered}, {"expected", vertex_count}};
        }
        report.checks.push_back(std::move(c));
    }
    {
        std::vector<IndependenceWitness> verdicts(parts.size());
        auto work = [&](std::size_t first, std::size_t stride) {
            for (std::size_t j = first; j < parts.size(); j += stride)
                verdicts[j] = is_independent(params, std::span<const Rank>(parts[j]));
        };
        const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, parts.size()));
        if (workers == 1) {
            work(0, 1);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
        }
        Check c{"independent", true, nullptr};
        for (std::size_t j = 0; j < parts.size() && c.pass; ++j)
            if (!verdicts[j].independent) {
                c.pass = false;
                const auto [u, v] = *verdicts[j].conflicting_edge;
                c.witness = {{"part", j + 1}, {"edge", {label(u), label(v)}}};
            }
        report.checks.push_back(std::move(c));
    }
    {
        Check c{"one_per_suffix_class", true, nullptr};
        std::vector<std::vector<bool>> in_part(parts.size(), std::vector<bool>(vertex_count, false));
        for (std::size_t j = 0; j < parts.size(); ++j)
            for (Rank r : parts[j]) in_part[j][r] = true;
        for (const auto& cls : suffix_classes(params)) {
            for (std::size_t j = 0; j < parts.size() && c.pass; ++j) {
                const auto hits = std::count_if(cls.members.begin(), cls.members.end(), [&](Rank r) { return in_part[j][r]; });
                if (hits != 1) {
                    c.pass = false;
                    std::string suffix;
                    for (std::size_t t = 0; t < cls.suffix.size(); ++t)
                        suffix += (t ? "," : "") + std::to_string(cls.suffix[t]);
                    c.witness = {{"suffix", suffix}, {"part", j + 1}, {"count", hits}};
                }
            }
            if (!c.pass) break;
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

std::uint64_t upper_bound_clique_cover(const StarGraph& g) { return suffix_classes(g.params()).size(); }

OracleResult alpha_exact(const StarGraph& g, const OracleOptions& options) {
    check_cap(g, options, "alpha", "n!/(n-k+1)!");
    const auto start = Clock::now();
    IndependentSetSearch search(g, upper_bound_clique_cover(g));
    search.seed(search.greedy());
    if (options.seed) {
        const auto verdict = is_independent(g, std::span<const Rank>(*options.seed));
        if (!verdict.independent) throw ArgumentError("seed set for alpha search is not independent");
        auto seed = sorted_unique(*options.seed, g.vertex_count());
        search.seed(std::move(seed));
    }
    search.run();
    OracleResult out;
    out.quantity = Quantity::alpha;
    out.independent_set = search.best();
    std::sort(out.independent_set.begin(), out.independent_set.end());
    out.value = out.independent_set.size();
    out.nodes = search.nodes();
    out.elapsed = Clock::now() - start;
    return out;
}

OracleResult chi_exact(const StarGraph& g, const OracleOptions& options) {
    check_cap(g, options, "chi", "n-k+1");
    const auto start = Clock::now();
    const auto classes = suffix_classes(g.params());
    const auto& clique =
        std::find_if(classes.begin(), classes.end(), [](const SuffixClass& c) { return c.members.front() == 0; })->members;
    OracleResult out;
    out.quantity = Quantity::chi;
    for (int t = static_cast<int>(clique.size());; ++t) {
        ColoringSearch search(g, t);
        if (!search.precolor(clique)) continue;
        const bool found = search.run();
        out.nodes += search.nodes();
        if (found) {
            out.value = static_cast<std::uint64_t>(t);
            out.coloring = search.coloring();
            break;
        }
    }
    out.elapsed = Clock::now() - start;
    return out;
}

std::optional<std::pair<Rank, Rank>> find_monochromatic_edge(const StarGraph& g, std::span<const int> coloring) {
    if (coloring.size() != g.vertex_count()) throw ArgumentError("coloring does not cover every vertex");
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.neighbors(u))
            if (v > u && coloring[u] == coloring[v]) return std::pair<Rank, Rank>{u, v};
    return std::nullopt;
}

}  // namespace starkit
