#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orthoplan/completion.hpp"
#include "orthoplan/triangles.hpp"

using namespace orthoplan;

namespace {

std::pair<PlanarGraph, SiteL> modified_g5() {
    SiteL site;
    site.a = 1;
    site.b = 4;
    site.c = 2;
    site.d = 5;
    site.C1 = 3;
    return modify_kl(fixtures::g5(), site);
}

} // namespace

TEST_CASE("find_boundary_arcs on a length-3 outer cycle") {
    auto [g, site] = modified_g5();
    (void)site;
    auto arcs = find_boundary_arcs(g);
    std::set<Vid> covered;
    for (auto& a : arcs.arcs) covered.insert(a.begin(), a.end());
    CHECK(covered == std::set<Vid>{1, 2, 3});
    // consecutive arcs share exactly the corner vertex
    for (int i = 0; i < 4; ++i) {
        auto& cur = arcs.arcs[i];
        auto& nxt = arcs.arcs[(i + 1) % 4];
        CHECK(cur.back() == nxt.front());
    }
    // one arc is a single vertex
    int singles = 0;
    for (auto& a : arcs.arcs)
        if (a.size() == 1) ++singles;
    CHECK(singles == 1);
}

TEST_CASE("four_complete lengthens a triangle boundary before framing") {
    auto [g, site] = modified_g5();
    (void)site;
    auto cg = four_complete(g, find_boundary_arcs(g));
    // 6 original + 1 boundary split + 4 directions
    CHECK(cg.graph.num_vertices() == 11);
    REQUIRE(cg.boundary_split.has_value());
    CHECK(cg.boundary_split->first == std::make_pair(1, 2));
    CHECK(validate_ptg(cg.graph).verdict());
    // outer face is the four-cycle of direction vertices
    std::set<Vid> outer(cg.graph.outer_face().begin(), cg.graph.outer_face().end());
    CHECK(outer == std::set<Vid>{cg.N, cg.E, cg.S, cg.W});
    // degree(X) = |arc(X)| + 2
    for (int i = 0; i < 4; ++i) {
        Vid x = cg.direction_of_arc(i);
        CHECK(cg.graph.degree(x) ==
              static_cast<int>(cg.arcs_used.arcs[i].size()) + 2);
    }
}

TEST_CASE("four_complete on the bare triangle needs no split") {
    auto g = fixtures::triangle();
    auto cg = four_complete(g, find_boundary_arcs(g));
    CHECK(cg.graph.num_vertices() == 7);
    CHECK_FALSE(cg.boundary_split.has_value());
    CHECK(validate_ptg(cg.graph).verdict());
}

TEST_CASE("add_ns_edge yields a 4-connected graph") {
    auto [g, site] = modified_g5();
    (void)site;
    auto cg = add_ns_edge(four_complete(g, find_boundary_arcs(g)));
    CHECK(cg.ns_edge_present);
    CHECK(cg.graph.has_edge(cg.N, cg.S));
    CHECK(connectivity_at_least(cg.graph, 4));
    // repeat call errors
    CHECK_THROWS_AS(add_ns_edge(cg), precondition_error);
}

TEST_CASE("add_ns_edge on the completed octahedron") {
    auto g = fixtures::oct();
    auto cg = add_ns_edge(four_complete(g, find_boundary_arcs(g)));
    CHECK(connectivity_at_least(cg.graph, 4));
    CHECK(cg.graph.num_vertices() == 11); // 6 + split + frame
}

TEST_CASE("length-4 boundary: each arc is a single edge") {
    // modified G5 after the completion-level split has a 4-boundary; build
    // the same shape directly by splitting first
    auto [g, site] = modified_g5();
    (void)site;
    auto g4 = boundary_subdivide(g, 1, 2, 99);
    CHECK(g4.outer_face().size() == 4);
    auto arcs = find_boundary_arcs(g4);
    for (auto& a : arcs.arcs) CHECK(a.size() == 2);
    auto cg = four_complete(g4, arcs);
    CHECK_FALSE(cg.boundary_split.has_value());
    CHECK(validate_ptg(cg.graph).verdict());
}

TEST_CASE("arc mismatch is detected") {
    auto [g, site] = modified_g5();
    (void)site;
    auto g4 = boundary_subdivide(g, 1, 2, 99);
    auto arcs = find_boundary_arcs(g4);
    arcs.arcs[0] = {1, 5}; // 5 is interior
    CHECK_THROWS_AS(four_complete(g4, arcs), arc_mismatch_error);
}
