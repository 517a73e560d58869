#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orthoplan/ordering.hpp"

using namespace orthoplan;

namespace {

CompletedGraph completed(const PlanarGraph& g) {
    return add_ns_edge(four_complete(g, find_boundary_arcs(g)));
}

std::pair<CompletedGraph, SiteL> l_setup_g5() {
    SiteL site;
    site.a = 1;
    site.b = 4;
    site.c = 2;
    site.d = 5;
    site.C1 = 3;
    auto [g, s] = modify_kl(fixtures::g5(), site);
    return {completed(g), s};
}

} // namespace

TEST_CASE("canonical_order on the completed octahedron") {
    auto cg = completed(fixtures::oct());
    auto ord = canonical_order(cg);
    int n = cg.graph.num_vertices();
    CHECK(ord.rank_of(cg.W) == 1);
    CHECK(ord.rank_of(cg.S) == 2);
    CHECK(ord.rank_of(cg.N) == n);
    CHECK(ord.rank_of(cg.E) == n - 1);
    CHECK(validate_ordering(cg, ord).verdict());
}

TEST_CASE("canonical_order requires the (N,S) edge") {
    auto cg = four_complete(fixtures::oct(), find_boundary_arcs(fixtures::oct()));
    CHECK_THROWS_AS(canonical_order(cg), precondition_error);
}

TEST_CASE("canonical_order of the completed modified-G6 site graph") {
    auto sites = find_kt(fixtures::g6());
    REQUIRE(sites.size() == 1);
    auto [g, s] = modify_kt(fixtures::g6(), sites[0]);
    (void)s;
    auto cg = completed(g);
    auto ord = canonical_order(cg);
    CHECK(validate_ordering(cg, ord).verdict());
    CHECK(ord.size() == cg.graph.num_vertices());
}

TEST_CASE("canon_label_partial pauses with the frozen site unlabeled") {
    auto [cg, site] = l_setup_g5();
    std::vector<Vid> frozen = {site.a, site.b, site.c, site.d, *site.u, site.C1};
    auto st = canon_label_partial(cg, frozen);
    for (Vid f : frozen) CHECK(st.rank[cg.graph.index(f)] == 0);
    CHECK(st.rank[cg.graph.index(cg.N)] == cg.graph.num_vertices());
    CHECK(st.rank[cg.graph.index(cg.E)] == cg.graph.num_vertices() - 1);
    CHECK(chords_consistent(st));
}

TEST_CASE("canon_label_partial with empty frozen set completes like canonical_order") {
    auto cg = completed(fixtures::oct());
    auto st = canon_label_partial(cg, {});
    for (int r : st.rank) CHECK(r != 0);
}

TEST_CASE("frozen set containing W is rejected") {
    auto [cg, site] = l_setup_g5();
    (void)site;
    CHECK_THROWS_AS(canon_label_partial(cg, {cg.W}), precondition_error);
}

TEST_CASE("try_category: non-permutation priority list is rejected") {
    auto [cg, site] = l_setup_g5();
    std::vector<Vid> frozen = {site.a, site.b, site.c, site.d, *site.u, site.C1};
    auto st = canon_label_partial(cg, frozen);
    CHECK_THROWS_AS(try_category(st, {site.a, site.a, site.d, site.C1}), precondition_error);
}

TEST_CASE("prioritized_order on completed modified-G5") {
    auto [cg, site] = l_setup_g5();
    auto [ord, cat] = prioritized_order(cg, site);
    CHECK(cat != Category::None);
    CHECK(validate_ordering(cg, ord).verdict());

    // priority semantics: rank-descending restriction to {a,d,u,C1} equals
    // the winning category sequence
    auto seq = category_sequence(cat, site);
    std::vector<std::pair<int, Vid>> got;
    for (Vid v : {site.a, site.d, *site.u, site.C1}) got.push_back({-ord.rank_of(v), v});
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 4; ++i) CHECK(got[i].second == seq[i]);

    // u is never the first of the four to be ranked
    CHECK(got[0].second != *site.u);
}

TEST_CASE("validate_ordering rejects corrupted orderings") {
    auto cg = completed(fixtures::oct());
    auto ord = canonical_order(cg);

    SUBCASE("swapping v1 and v2") {
        auto bad = ord;
        std::swap(bad.by_rank[0], bad.by_rank[1]);
        bad.rank[bad.by_rank[0]] = 1;
        bad.rank[bad.by_rank[1]] = 2;
        CHECK_FALSE(validate_ordering(cg, bad).verdict());
    }
    SUBCASE("swapping two middle ranks") {
        auto bad = ord;
        std::swap(bad.by_rank[3], bad.by_rank[5]);
        bad.rank[bad.by_rank[3]] = 4;
        bad.rank[bad.by_rank[5]] = 6;
        CHECK_FALSE(validate_ordering(cg, bad).verdict());
    }
}

TEST_CASE("ordering is deterministic") {
    auto cg1 = completed(fixtures::oct());
    auto cg2 = completed(fixtures::oct());
    auto a = canonical_order(cg1);
    auto b = canonical_order(cg2);
    CHECK(a.trace == b.trace);
}
