#include <algorithm>

#include "brute_force.hpp"
#include "doctest.h"
#include "starkit/oracle.hpp"

using namespace starkit;

namespace {

std::vector<Rank> ranks_of(const StarGraphParams& params, std::initializer_list<std::string_view> vs) {
    std::vector<Rank> out;
    for (auto v : vs) out.push_back(params.rank(parse_kperm(v, params.n())));
    return out;
}

}  // namespace

TEST_CASE("brute-force oracle values frozen for the small instances") {
    // computed by brute::alpha / brute::chi, independent of the library
    CHECK(brute::alpha(brute::make_graph(3, 2)) == 3);
    CHECK(brute::alpha(brute::make_graph(4, 2)) == 4);
    CHECK(brute::alpha(brute::make_graph(4, 3)) == 12);
    CHECK(brute::alpha(brute::make_graph(5, 2)) == 5);
    CHECK(brute::chi(brute::make_graph(3, 2)) == 2);
    CHECK(brute::chi(brute::make_graph(4, 2)) == 3);
    CHECK(brute::chi(brute::make_graph(4, 3)) == 2);
    CHECK(brute::chi(brute::make_graph(5, 2)) == 4);
}

TEST_CASE("is_independent") {
    const StarGraphParams params(4, 3);
    const StarGraph g = build(params);
    const auto pair = ranks_of(params, {"421", "124"});
    const auto w = is_independent(g, pair);
    REQUIRE_FALSE(w.independent);
    CHECK(g.vertex(w.conflicting_edge->first).to_string(true) == "124");
    CHECK(g.vertex(w.conflicting_edge->second).to_string(true) == "421");

    const auto c = construct(params);
    CHECK(is_independent(g, c.partition.parts[0]).independent);
    CHECK(is_independent(g, std::vector<Rank>{}).independent);
    CHECK_THROWS_AS(is_independent(g, std::vector<Rank>{24}), ArgumentError);
    CHECK_THROWS_AS(is_independent(params, std::vector<Rank>{24}), ArgumentError);
}

TEST_CASE("is_independent via params agrees with the built graph") {
    const StarGraphParams params(5, 3);
    const StarGraph g = build(params);
    // sliding windows and strided samples over the vertex set
    for (std::size_t stride = 1; stride <= 13; ++stride)
        for (std::size_t start = 0; start < 10; ++start) {
            std::vector<Rank> set;
            for (std::size_t v = start; v < g.vertex_count(); v += stride) set.push_back(v);
            const auto a = is_independent(g, set);
            const auto b = is_independent(params, set);
            REQUIRE(a.independent == b.independent);
            REQUIRE(a.conflicting_edge == b.conflicting_edge);
            if (a.conflicting_edge) CHECK(g.has_edge(a.conflicting_edge->first, a.conflicting_edge->second));
        }
}

TEST_CASE("verify_partition") {
    const StarGraphParams s43(4, 3);
    const auto good = verify_partition(s43, construct(s43).partition);
    CHECK(good.pass());
    CHECK(good.checks.size() == 6);
    CHECK(good.vertices_covered == 24);

    const auto bad = verify_partition(s43, flawed_construct_wei(s43).as_partition());
    CHECK_FALSE(bad.pass());
    const Check* independent = bad.find("independent");
    REQUIRE(independent != nullptr);
    CHECK_FALSE(independent->pass);
    CHECK(independent->witness["edge"] == nlohmann::json::array({"1,2,4", "4,2,1"}));

    const StarGraphParams s51(5, 1);
    CHECK(verify_partition(s51, base_k1(5)).pass());

    MisPartition duplicated = construct(s43).partition;
    duplicated.parts[1].push_back(duplicated.parts[0].front());
    std::sort(duplicated.parts[1].begin(), duplicated.parts[1].end());
    const auto dup = verify_partition(s43, duplicated);
    CHECK_FALSE(dup.find("disjoint")->pass);
    CHECK_FALSE(dup.find("part_sizes")->pass);
    CHECK(dup.find("covering")->pass);

    MisPartition dropped = construct(s43).partition;
    dropped.parts.pop_back();
    const auto drop = verify_partition(s43, dropped);
    CHECK_FALSE(drop.find("part_count")->pass);
    CHECK_FALSE(drop.find("covering")->pass);
    CHECK(drop.find("independent")->pass);

    CHECK_THROWS_AS(verify_partition({5, 3}, construct(s43).partition), ArgumentError);

    const auto doc = good.to_json();
    CHECK(doc["summary"] == "pass");
    CHECK(doc["checks"].size() == 6);
}

TEST_CASE("upper bound from the clique cover") {
    CHECK(upper_bound_clique_cover(build({4, 3})) == 12);
    CHECK(upper_bound_clique_cover(build({4, 2})) == 4);
    CHECK(upper_bound_clique_cover(build({5, 2})) == 5);
    CHECK(upper_bound_clique_cover(build({5, 1})) == 1);
}

TEST_CASE("alpha_exact") {
    CHECK(alpha_exact(build({3, 2})).value == 3);
    CHECK(alpha_exact(build({4, 2})).value == 4);
    CHECK(alpha_exact(build({4, 3})).value == 12);
    CHECK(alpha_exact(build({6, 1})).value == 1);

    const StarGraph g = build({5, 3});
    const auto r = alpha_exact(g);
    CHECK(r.value == 20);
    CHECK(r.independent_set.size() == r.value);
    CHECK(is_independent(g, r.independent_set).independent);

    const auto seeded = alpha_exact(g, {.search_cap = kDefaultSearchCap, .seed = r.independent_set});
    CHECK(seeded.value == 20);
    const auto from_part = alpha_exact(build({4, 3}), {.search_cap = kDefaultSearchCap, .seed = construct({4, 3}).partition.parts[1]});
    CHECK(from_part.value == 12);
    CHECK_THROWS_AS(alpha_exact(build({4, 3}), {.search_cap = kDefaultSearchCap, .seed = ranks_of({4, 3}, {"123", "213"})}),
                    ArgumentError);
    CHECK_THROWS_AS(alpha_exact(build({6, 4})), ResourceError);
    const auto wide = alpha_exact(build({7, 3}), {.search_cap = 210, .seed = construct({7, 3}).partition.parts[0]});
    CHECK(wide.value == 42);
}

TEST_CASE("chi_exact") {
    CHECK(chi_exact(build({3, 2})).value == 2);
    CHECK(chi_exact(build({4, 2})).value == 3);
    CHECK(chi_exact(build({4, 3})).value == 2);
    CHECK(chi_exact(build({5, 1})).value == 5);

    const StarGraph g = build({5, 3});
    const auto r = chi_exact(g);
    CHECK(r.value == 3);
    REQUIRE(r.coloring.size() == g.vertex_count());
    CHECK_FALSE(find_monochromatic_edge(g, r.coloring));
    CHECK(static_cast<std::uint64_t>(*std::max_element(r.coloring.begin(), r.coloring.end()) + 1) == r.value);
    CHECK_THROWS_AS(chi_exact(build({6, 4})), ResourceError);
}

TEST_CASE("coloring by part index is proper for n <= 8") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const StarGraph g = build({n, k});
            const auto c = construct({n, k});
            std::vector<int> color(g.vertex_count(), -1);
            for (std::size_t j = 0; j < c.partition.parts.size(); ++j)
                for (Rank r : c.partition.parts[j]) color[r] = static_cast<int>(j);
            // a base over 4 symbols cannot be lifted, so those colourings clash
            const bool liftable = k < 3 || n - k + 2 != 4;
            CHECK_MESSAGE(find_monochromatic_edge(g, color).has_value() != liftable, "n=" << n << " k=" << k);
        }
}
