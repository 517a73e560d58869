#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "orthoplan/planar_graph.hpp"

namespace orthoplan {

struct Triangle {
    std::array<Vid, 3> v{}; // sorted ascending
    bool is_face = false;

    static Triangle of(Vid a, Vid b, Vid c) {
        Triangle t;
        t.v = {a, b, c};
        std::sort(t.v.begin(), t.v.end());
        return t;
    }
    bool operator<(const Triangle& o) const { return v < o.v; }
    bool operator==(const Triangle& o) const { return v == o.v; }
};

// A located K_L: complex triangle (a,b,c) with single interior vertex d of
// degree 3; chosen interior edge (a,b); C1 = common neighbor of a,b besides
// c and d. u is set by modify_kl.
struct SiteL {
    Vid a = -1, b = -1, c = -1, d = -1;
    Vid C1 = -1;
    std::optional<Vid> u;
    Triangle triangle() const { return Triangle::of(a, b, c); }
};

// A located K_T: complex triangles (a,b,c) and (a,c,d) sharing edge (a,c),
// with interior degree-3 vertices e and f respectively.
struct SiteT {
    Vid a = -1, b = -1, c = -1, d = -1, e = -1, f = -1;
    std::optional<Vid> u;
    Triangle first() const { return Triangle::of(a, b, c); }
    Triangle second() const { return Triangle::of(a, c, d); }
};

struct RemovalPlan {
    std::vector<std::pair<Vid, Vid>> S; // edges to subdivide
    std::vector<Vid> enodes;            // inserted vertex per edge (after eliminate)
};

std::vector<Triangle> find_separating_triangles(const PlanarGraph& g);

// Vertices strictly inside separating triangle t.
std::vector<Vid> triangle_interior(const PlanarGraph& g, const Triangle& t);

std::vector<SiteL> find_kl(const PlanarGraph& g);
std::vector<SiteT> find_kt(const PlanarGraph& g);

RemovalPlan select_removal_edges(const PlanarGraph& g, const std::set<Triangle>& protect);

std::pair<PlanarGraph, RemovalPlan> eliminate_complex_triangles(const PlanarGraph& g,
                                                                const RemovalPlan& plan);

std::pair<PlanarGraph, SiteL> modify_kl(const PlanarGraph& g, const SiteL& site);
std::pair<PlanarGraph, SiteT> modify_kt(const PlanarGraph& g, const SiteT& site);

} // namespace orthoplan
