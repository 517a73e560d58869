#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orthoplan/triangles.hpp"
#include "orthoplan/verify.hpp"

using namespace orthoplan;

TEST_CASE("find_separating_triangles on the fixtures") {
    CHECK(find_separating_triangles(fixtures::oct()).empty());

    auto s5 = find_separating_triangles(fixtures::g5());
    REQUIRE(s5.size() == 1);
    CHECK(s5[0] == Triangle::of(1, 2, 4));

    auto s6 = find_separating_triangles(fixtures::g6());
    REQUIRE(s6.size() == 2);
    CHECK(s6[0] == Triangle::of(1, 2, 4));
    CHECK(s6[1] == Triangle::of(2, 3, 4));
}

TEST_CASE("detector agrees with the brute-force oracle on fixtures") {
    for (auto g : {fixtures::oct(), fixtures::g5(), fixtures::g6(), fixtures::triangle()}) {
        CHECK(find_separating_triangles(g) == brute_force_separating_triangles(g));
    }
}

TEST_CASE("triangle_interior") {
    auto g6 = fixtures::g6();
    CHECK(triangle_interior(g6, Triangle::of(1, 2, 4)) == std::vector<Vid>{5});
    CHECK(triangle_interior(g6, Triangle::of(2, 3, 4)) == std::vector<Vid>{6});
}

TEST_CASE("find_kl on G5 locates the K_L with C1 = 3") {
    auto sites = find_kl(fixtures::g5());
    REQUIRE(!sites.empty());
    bool found = false;
    for (auto& s : sites)
        if (s.a == 1 && s.b == 4 && s.c == 2 && s.d == 5 && s.C1 == 3) found = true;
    CHECK(found);
    // the outer edge (1,2) must never carry a site
    for (auto& s : sites) CHECK_FALSE((s.a == 1 && s.b == 2));
}

TEST_CASE("find_kl is empty on the octahedron") { CHECK(find_kl(fixtures::oct()).empty()); }

TEST_CASE("find_kl on G6 includes the (1,2,4) site") {
    auto sites = find_kl(fixtures::g6());
    bool found = false;
    for (auto& s : sites)
        if (s.triangle() == Triangle::of(1, 2, 4) && s.d == 5) found = true;
    CHECK(found);
}

TEST_CASE("find_kt locates the shared-edge pair in G6") {
    auto sites = find_kt(fixtures::g6());
    REQUIRE(sites.size() == 1);
    auto& s = sites[0];
    CHECK(s.a == 2);
    CHECK(s.b == 1);
    CHECK(s.c == 4);
    CHECK(s.d == 3);
    CHECK(s.e == 5);
    CHECK(s.f == 6);
}

TEST_CASE("find_kt is empty on G5 and OCT") {
    CHECK(find_kt(fixtures::g5()).empty());
    CHECK(find_kt(fixtures::oct()).empty());
}

TEST_CASE("role consistency of returned sites") {
    for (auto g : {fixtures::g5(), fixtures::g6()}) {
        for (auto& s : find_kl(g)) {
            std::set<Vid> nbd(g.neighbors(s.d).begin(), g.neighbors(s.d).end());
            CHECK(nbd == std::set<Vid>{s.a, s.b, s.c});
        }
        for (auto& s : find_kt(g)) {
            std::set<Vid> ne(g.neighbors(s.e).begin(), g.neighbors(s.e).end());
            std::set<Vid> nf(g.neighbors(s.f).begin(), g.neighbors(s.f).end());
            CHECK(ne == std::set<Vid>{s.a, s.b, s.c});
            CHECK(nf == std::set<Vid>{s.a, s.c, s.d});
        }
    }
}

TEST_CASE("select_removal_edges: protecting the K_T pair leaves S empty") {
    auto g6 = fixtures::g6();
    auto plan = select_removal_edges(g6, {Triangle::of(1, 2, 4), Triangle::of(2, 3, 4)});
    CHECK(plan.S.empty());
}

TEST_CASE("select_removal_edges: protecting (1,2,4) in G6 picks (2,3)") {
    auto plan = select_removal_edges(fixtures::g6(), {Triangle::of(1, 2, 4)});
    REQUIRE(plan.S.size() == 1);
    CHECK(plan.S[0] == std::make_pair(2, 3));
}

TEST_CASE("select_removal_edges: octahedron needs nothing") {
    CHECK(select_removal_edges(fixtures::oct(), {}).S.empty());
}

TEST_CASE("eliminate_complex_triangles on G6 with S=[(2,3)]") {
    auto g6 = fixtures::g6();
    RemovalPlan plan;
    plan.S = {{2, 3}};
    auto [g, done] = eliminate_complex_triangles(g6, plan);
    CHECK(g.num_vertices() == 7);
    REQUIRE(done.enodes.size() == 1);
    Vid u = done.enodes[0];
    std::set<Vid> nbd(g.neighbors(u).begin(), g.neighbors(u).end());
    CHECK(nbd == std::set<Vid>{2, 3, 1, 6});
    CHECK(validate_ptg(g).verdict());
    auto seps = find_separating_triangles(g);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0] == Triangle::of(1, 2, 4));
}

TEST_CASE("eliminate with empty plan is the identity") {
    auto g = fixtures::g5();
    auto [h, done] = eliminate_complex_triangles(g, {});
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.edge_list() == g.edge_list());
    CHECK(done.enodes.empty());
}

TEST_CASE("subdividing an outer edge lands the new vertex in the outer region") {
    // (1,2) of G5 lies on the outer face; the apexes are 5 (inner) and 3
    auto g5 = fixtures::g5();
    RemovalPlan plan;
    plan.S = {{1, 2}};
    auto [g, done] = eliminate_complex_triangles(g5, plan);
    Vid u = done.enodes[0];
    std::set<Vid> nbd(g.neighbors(u).begin(), g.neighbors(u).end());
    CHECK(nbd == std::set<Vid>{1, 2, 5, 3});
    CHECK(validate_ptg(g).verdict());
}

TEST_CASE("modify_kl on G5") {
    auto g5 = fixtures::g5();
    SiteL site;
    site.a = 1;
    site.b = 4;
    site.c = 2;
    site.d = 5;
    site.C1 = 3;
    auto [g, s] = modify_kl(g5, site);
    CHECK(g.num_vertices() == 6);
    REQUIRE(s.u.has_value());
    Vid u = *s.u;
    CHECK(u == 6);
    std::set<Vid> nbd(g.neighbors(u).begin(), g.neighbors(u).end());
    CHECK(nbd == std::set<Vid>{3, 5, 1, 4});
    CHECK(find_separating_triangles(g).empty());
    CHECK(validate_ptg(g).verdict());
    // the four replacement faces
    std::set<std::set<Vid>> sets;
    for (auto& f : g.faces()) sets.insert(std::set<Vid>(f.vertices.begin(), f.vertices.end()));
    for (auto want : {std::set<Vid>{1, 5, 6}, std::set<Vid>{5, 4, 6}, std::set<Vid>{4, 3, 6},
                      std::set<Vid>{3, 1, 6}})
        CHECK(sets.count(want));
    // inserted vertex has degree exactly 4
    CHECK(g.degree(u) == 4);

    // repeat call: edge (a,b) is gone
    CHECK_THROWS_AS(modify_kl(g, s), precondition_error);
}

TEST_CASE("modify_kl requires a clean graph") {
    // G6 still has (2,3,4) separating: modifying (1,2,4) must fail
    SiteL site;
    site.a = 1;
    site.b = 4;
    site.c = 2;
    site.d = 5;
    site.C1 = 3;
    CHECK_THROWS_AS(modify_kl(fixtures::g6(), site), precondition_error);
}

TEST_CASE("modify_kt on G6") {
    auto g6 = fixtures::g6();
    auto sites = find_kt(g6);
    REQUIRE(sites.size() == 1);
    auto [g, s] = modify_kt(g6, sites[0]);
    CHECK(g.num_vertices() == 7);
    REQUIRE(s.u.has_value());
    Vid u = *s.u;
    CHECK(u == 7);
    std::set<Vid> nbd(g.neighbors(u).begin(), g.neighbors(u).end());
    CHECK(nbd == std::set<Vid>{5, 6, 2, 4});
    CHECK(find_separating_triangles(g).empty());
    CHECK(g.degree(u) == 4);

    // fabricated site on OCT fails the precondition
    CHECK_THROWS_AS(modify_kt(fixtures::oct(), sites[0]), precondition_error);
    // double call
    CHECK_THROWS_AS(modify_kt(g, s), precondition_error);
}
