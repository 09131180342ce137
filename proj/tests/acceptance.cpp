// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// usage: acceptance STARKIT_BINARY SCRATCH_DIR

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starkit/graph.hpp"
#include "starkit/oracle.hpp"
#include "starkit/partition.hpp"

using namespace starkit;
namespace fs = std::filesystem;

namespace {

// product n (n-1) ... (n-count+1), kept apart from the library's arithmetic
std::uint64_t falling(int n, int count) {
    std::uint64_t out = 1;
    for (int t = 0; t < count; ++t) out *= static_cast<std::uint64_t>(n - t);
    return out;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

std::string label(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

int failed_criteria = 0;

void report(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) o.fail("runtime exceeded");
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "  [" << secs << " s";
    if (limit_s > 0) line << ", limit " << limit_s << " s";
    line << "]";
    if (!o.pass) {
        line << "  failing:";
        const std::size_t shown = std::min<std::size_t>(o.failures.size(), 12);
        for (std::size_t t = 0; t < shown; ++t) line << (t ? "; " : " ") << o.failures[t];
        if (shown < o.failures.size()) line << "; ... " << o.failures.size() - shown << " more";
    }
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failed_criteria;
}

// Degree, order and symmetry of every graph built by the other criteria.
Outcome basics;
int graphs_seen = 0;

StarGraph built(int n, int k) {
    StarGraph g = build({n, k});
    ++graphs_seen;
    const std::string where = label(n, k);
    basics.expect(g.vertex_count() == falling(n, k), where + " order");
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(v);
        if (nb.size() != static_cast<std::size_t>(n - 1) || std::set<StarGraph::Vertex>(nb.begin(), nb.end()).size() != nb.size()) {
            basics.fail(where + " degree at " + std::to_string(v));
            break;
        }
        bool symmetric = std::none_of(nb.begin(), nb.end(), [&](auto u) { return u == v || !g.has_edge(u, v); });
        if (!symmetric) {
            basics.fail(where + " asymmetric at " + std::to_string(v));
            break;
        }
    }
    return g;
}

// every (n,k) with n!/(n-k)! <= 200
std::vector<std::pair<int, int>> oracle_instances() {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= 200; ++n) {
        std::uint64_t order = n;
        for (int k = 1; k <= n - 1 && order <= 200; order *= static_cast<std::uint64_t>(n - k), ++k) out.emplace_back(n, k);
    }
    return out;
}

std::set<std::string> names(const StarGraphParams& params, const std::vector<Rank>& ranks) {
    std::set<std::string> out;
    for (Rank r : ranks) out.insert(params.vertex(r).to_string(true));
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance STARKIT_BINARY SCRATCH_DIR\n";
        return 2;
    }
    const std::string binary = argv[1];
    const fs::path scratch = fs::path(argv[2]) / "acceptance_scratch";
    fs::create_directories(scratch);

    report(1, "golden construction of S(4,3)", 1.0, [] {
        Outcome o;
        const StarGraphParams params(4, 3);
        const auto parts = construct(params).partition.parts;
        o.expect(parts.size() == 2, "part count");
        if (parts.size() == 2) {
            const std::set<std::string> i1{"124", "234", "314", "241", "321", "431", "412", "342", "132", "213", "423", "143"};
            const std::set<std::string> i2{"134", "214", "324", "341", "421", "231", "312", "142", "432", "413", "123", "243"};
            o.expect(parts[0].size() == 12 && names(params, parts[0]) == i1, "I_1 differs");
            o.expect(parts[1].size() == 12 && names(params, parts[1]) == i2, "I_2 differs");
        }
        return o;
    });

    report(2, "earlier construction holds adjacent 124 and 421", 1.0, [] {
        Outcome o;
        const StarGraphParams params(4, 3);
        const VertexSet set = flawed_construct_wei(params).final_set();
        const auto has = [&](const char* v) { return std::find(set.begin(), set.end(), parse_kperm(v, 4)) != set.end(); };
        o.expect(has("124") && has("421"), "124 and 421 not in one set");
        const auto w = is_independent(params, set);
        o.expect(!w.independent, "set reported independent");
        if (w.conflicting_edge) {
            const auto a = params.vertex(w.conflicting_edge->first).to_string(true);
            const auto b = params.vertex(w.conflicting_edge->second).to_string(true);
            o.expect(a == "124" && b == "421", "flagged edge " + a + "-" + b);
        }
        return o;
    });

    const auto instances = oracle_instances();

    report(3, "alpha_exact = n!/(n-k+1)! on " + std::to_string(instances.size()) + " instances with at most 200 vertices",
           60.0, [&] {
               Outcome o;
               for (auto [n, k] : instances) {
                   const StarGraph g = built(n, k);
                   const auto r = alpha_exact(g);
                   const std::uint64_t want = falling(n, k - 1);
                   o.expect(r.value == want, label(n, k) + " alpha " + std::to_string(r.value) + " != " + std::to_string(want));
                   o.expect(r.independent_set.size() == r.value && is_independent(g, r.independent_set).independent,
                            label(n, k) + " witness");
               }
               return o;
           });

    report(4, "chi_exact = n-k+1 on the same instances", 60.0, [&] {
        Outcome o;
        for (auto [n, k] : instances) {
            const StarGraph g = built(n, k);
            const auto r = chi_exact(g);
            const auto want = static_cast<std::uint64_t>(n - k + 1);
            o.expect(r.value == want, label(n, k) + " chi " + std::to_string(r.value) + " != " + std::to_string(want));
            const bool proper = r.coloring.size() == g.vertex_count() && !find_monochromatic_edge(g, r.coloring) &&
                                std::all_of(r.coloring.begin(), r.coloring.end(),
                                            [&](int c) { return c >= 0 && static_cast<std::uint64_t>(c) < r.value; });
            o.expect(proper, label(n, k) + " witness colouring");
        }
        return o;
    });

    report(5, "verify_partition(construct(n,k)) passes all six checks for 2 <= n <= 8", 120.0, [] {
        Outcome o;
        for (int n = 2; n <= 8; ++n)
            for (int k = 1; k <= n - 1; ++k) {
                const StarGraphParams params(n, k);
                const auto c = construct(params);
                const auto rep = verify_partition(params, c.partition);
                std::string bad;
                for (const auto& check : rep.checks)
                    if (!check.pass) bad += (bad.empty() ? "" : ",") + check.name;
                if (rep.checks.size() != 6) bad += (bad.empty() ? "" : ",") + std::string("check count");
                // colouring by part index, checked on the materialized graph
                const StarGraph g = built(n, k);
                std::vector<int> colour(g.vertex_count(), -1);
                for (std::size_t j = 0; j < c.partition.parts.size(); ++j)
                    for (Rank r : c.partition.parts[j])
                        if (r < colour.size()) colour[r] = static_cast<int>(j);
                if (std::find(colour.begin(), colour.end(), -1) != colour.end() || find_monochromatic_edge(g, colour))
                    bad += (bad.empty() ? "" : ",") + std::string("graph colouring");
                if (!bad.empty()) o.fail(label(n, k) + " " + bad);
            }
        return o;
    });

    report(6, "clique cover and last-symbol decomposition for 2 <= n <= 6, k >= 2", 30.0, [] {
        Outcome o;
        for (int n = 3; n <= 6; ++n)
            for (int k = 2; k <= n - 1; ++k) {
                const StarGraph g = built(n, k);
                const auto cover = check_clique_cover(g);
                o.expect(cover.ok, label(n, k) + " clique cover: " + cover.detail);
                o.expect(cover.classes.size() == falling(n, k - 1), label(n, k) + " class count");
                const auto dec = check_decomposition(g);
                o.expect(dec.ok, label(n, k) + " decomposition: " + dec.detail);
                o.expect(dec.classes_checked == n, label(n, k) + " classes checked");
            }
        return o;
    });

    report(8, "every intermediate set of construct(n,k) is independent for n <= 7", 60.0, [] {
        Outcome o;
        for (int n = 2; n <= 7; ++n)
            for (int k = 1; k <= n - 1; ++k) {
                const auto c = construct({n, k});
                for (const auto& level : c.trace.levels) {
                    const StarGraph g = built(level.ground, level.length);
                    for (std::size_t j = 0; j < level.sets.size(); ++j) {
                        std::vector<Rank> ranks;
                        for (const auto& p : level.sets[j]) ranks.push_back(g.params().rank(p));
                        if (!is_independent(g, ranks).independent)
                            o.fail(label(n, k) + " I_" + std::to_string(j + 1) + "^" + std::to_string(level.length));
                    }
                }
            }
        return o;
    });

    report(9, "two runs of `partition -n 6 -k 3 --out` are byte-identical", 0.0, [&] {
        Outcome o;
        std::string bytes[2];
        for (int run = 0; run < 2; ++run) {
            const fs::path out = scratch / ("determinism_" + std::to_string(run) + ".json");
            fs::remove(out);
            const std::string cmd = "\"" + binary + "\" partition -n 6 -k 3 --out \"" + out.string() + "\" > /dev/null";
            o.expect(std::system(cmd.c_str()) == 0, "run " + std::to_string(run) + " exit status");
            bytes[run] = slurp(out);
        }
        o.expect(!bytes[0].empty(), "empty output");
        o.expect(bytes[0] == bytes[1], "outputs differ");
        return o;
    });

    // reported last so it covers the graphs built by every other criterion
    report(7, "order n!/(n-k)!, degree n-1 and symmetric adjacency on " + std::to_string(graphs_seen) + " built graphs", 0.0,
           [] { return basics; });

    std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed") << '\n';
    return failed_criteria == 0 ? 0 : 1;
}
