#include "orthoplan/triangles.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace orthoplan {

std::vector<Triangle> find_separating_triangles(const PlanarGraph& g) {
    auto rep = validate_ptg(g);
    if (!rep.verdict()) throw precondition_error("not a PTG: " + rep.first_failure());

    std::set<Triangle> faces3;
    Triangle outer_t{};
    bool outer_is_triangle = g.outer_face().size() == 3;
    if (outer_is_triangle)
        outer_t = Triangle::of(g.outer_face()[0], g.outer_face()[1], g.outer_face()[2]);
    for (auto& f : g.faces())
        if (f.vertices.size() == 3)
            faces3.insert(Triangle::of(f.vertices[0], f.vertices[1], f.vertices[2]));

    // adjacency hash sets for the common-neighbor scan
    std::unordered_map<Vid, std::unordered_set<Vid>> adj;
    for (Vid v : g.vertex_ids())
        adj.emplace(v, std::unordered_set<Vid>(g.neighbors(v).begin(), g.neighbors(v).end()));

    std::vector<Triangle> out;
    for (auto& [a, b] : g.edge_list()) {
        const auto& small = adj.at(a).size() <= adj.at(b).size() ? adj.at(a) : adj.at(b);
        const auto& big = adj.at(a).size() <= adj.at(b).size() ? adj.at(b) : adj.at(a);
        for (Vid w : small) {
            if (w <= b || w <= a) continue; // count each triangle once via its two smallest
            if (!big.count(w)) continue;
            Triangle t = Triangle::of(a, b, w);
            if (faces3.count(t)) continue;
            if (outer_is_triangle && t == outer_t) continue;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vid> triangle_interior(const PlanarGraph& g, const Triangle& t) {
    // BFS from an outer vertex not in t; unreached non-t vertices are inside.
    std::set<Vid> tv(t.v.begin(), t.v.end());
    Vid start = -1;
    for (Vid v : g.outer_face())
        if (!tv.count(v)) {
            start = v;
            break;
        }
    if (start < 0) return {}; // t == outer boundary
    std::set<Vid> seen = tv;
    std::vector<Vid> q{start};
    seen.insert(start);
    size_t head = 0;
    while (head < q.size()) {
        Vid v = q[head++];
        for (Vid w : g.neighbors(v))
            if (!seen.count(w)) {
                seen.insert(w);
                q.push_back(w);
            }
    }
    std::vector<Vid> inside;
    for (Vid v : g.vertex_ids())
        if (!seen.count(v)) inside.push_back(v);
    std::sort(inside.begin(), inside.end());
    return inside;
}

std::vector<SiteL> find_kl(const PlanarGraph& g) {
    std::vector<SiteL> out;
    for (auto& t : find_separating_triangles(g)) {
        auto inside = triangle_interior(g, t);
        if (inside.size() != 1) continue;
        Vid d = inside[0];
        if (g.degree(d) != 3) continue;
        // one candidate per interior triangle edge with a valid C1
        std::array<std::pair<Vid, Vid>, 3> sides = {
            std::make_pair(t.v[0], t.v[1]), std::make_pair(t.v[0], t.v[2]),
            std::make_pair(t.v[1], t.v[2])};
        for (auto& [x, y] : sides) {
            if (g.edge_on_outer_face(x, y)) continue;
            Vid third = t.v[0] ^ t.v[1] ^ t.v[2] ^ x ^ y;
            std::set<Vid> ny(g.neighbors(y).begin(), g.neighbors(y).end());
            std::vector<Vid> common;
            for (Vid w : g.neighbors(x))
                if (ny.count(w) && w != third && w != d) common.push_back(w);
            if (common.empty()) continue;
            SiteL s;
            s.a = x;
            s.b = y;
            s.c = third;
            s.d = d;
            s.C1 = *std::min_element(common.begin(), common.end());
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const SiteL& p, const SiteL& q) {
        return std::tie(p.a, p.b, p.c, p.d) < std::tie(q.a, q.b, q.c, q.d);
    });
    return out;
}

std::vector<SiteT> find_kt(const PlanarGraph& g) {
    auto seps = find_separating_triangles(g);
    // keep only K4-style triangles (single degree-3 interior vertex)
    struct K4 {
        Triangle t;
        Vid d;
    };
    std::vector<K4> k4s;
    for (auto& t : seps) {
        auto inside = triangle_interior(g, t);
        if (inside.size() == 1 && g.degree(inside[0]) == 3) k4s.push_back({t, inside[0]});
    }
    std::vector<SiteT> out;
    for (size_t i = 0; i < k4s.size(); ++i) {
        for (size_t j = i + 1; j < k4s.size(); ++j) {
            // shared edge = exactly two shared vertices
            std::vector<Vid> shared;
            for (Vid v : k4s[i].t.v)
                for (Vid w : k4s[j].t.v)
                    if (v == w) shared.push_back(v);
            if (shared.size() != 2) continue;
            if (!g.has_edge(shared[0], shared[1])) continue;
            if (g.edge_on_outer_face(shared[0], shared[1])) continue;
            Vid a = std::min(shared[0], shared[1]);
            Vid c = std::max(shared[0], shared[1]);
            Vid apex_i = k4s[i].t.v[0] ^ k4s[i].t.v[1] ^ k4s[i].t.v[2] ^ a ^ c;
            Vid apex_j = k4s[j].t.v[0] ^ k4s[j].t.v[1] ^ k4s[j].t.v[2] ^ a ^ c;
            SiteT s;
            s.a = a;
            s.c = c;
            if (apex_i <= apex_j) {
                s.b = apex_i;
                s.d = apex_j;
                s.e = k4s[i].d;
                s.f = k4s[j].d;
            } else {
                s.b = apex_j;
                s.d = apex_i;
                s.e = k4s[j].d;
                s.f = k4s[i].d;
            }
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const SiteT& p, const SiteT& q) {
        return std::tie(p.a, p.b, p.c, p.d) < std::tie(q.a, q.b, q.c, q.d);
    });
    return out;
}

RemovalPlan select_removal_edges(const PlanarGraph& g, const std::set<Triangle>& protect) {
    auto seps = find_separating_triangles(g);
    std::set<Triangle> sepset(seps.begin(), seps.end());
    for (auto& t : protect)
        if (!sepset.count(t)) throw precondition_error("protected triangle is not separating");

    // forbidden: edges of protected triangles and spokes to their interior vertices
    std::set<std::uint64_t> forbidden;
    for (auto& t : protect) {
        forbidden.insert(PlanarGraph::edge_key(t.v[0], t.v[1]));
        forbidden.insert(PlanarGraph::edge_key(t.v[0], t.v[2]));
        forbidden.insert(PlanarGraph::edge_key(t.v[1], t.v[2]));
        for (Vid d : triangle_interior(g, t))
            for (Vid w : g.neighbors(d)) forbidden.insert(PlanarGraph::edge_key(d, w));
    }

    std::vector<Triangle> targets;
    for (auto& t : seps)
        if (!protect.count(t)) targets.push_back(t);

    // greedy max-cover; ties by smallest (a,b)
    std::map<std::pair<Vid, Vid>, std::vector<int>> edge_to_targets;
    for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
        auto& t = targets[i];
        std::array<std::pair<Vid, Vid>, 3> sides = {
            std::make_pair(t.v[0], t.v[1]), std::make_pair(t.v[0], t.v[2]),
            std::make_pair(t.v[1], t.v[2])};
        bool hittable = false;
        for (auto& e : sides) {
            if (forbidden.count(PlanarGraph::edge_key(e.first, e.second))) continue;
            edge_to_targets[e].push_back(i);
            hittable = true;
        }
        if (!hittable)
            throw unhittable_error("separating triangle (" + std::to_string(t.v[0]) + "," +
                                   std::to_string(t.v[1]) + "," + std::to_string(t.v[2]) +
                                   ") has no admissible edge");
    }

    RemovalPlan plan;
    std::vector<char> covered(targets.size(), 0);
    int remaining = static_cast<int>(targets.size());
    while (remaining > 0) {
        std::pair<Vid, Vid> best{-1, -1};
        int best_count = 0;
        for (auto& [e, ts] : edge_to_targets) {
            int c = 0;
            for (int i : ts)
                if (!covered[i]) ++c;
            if (c > best_count) {
                best_count = c;
                best = e;
            }
        }
        if (best_count == 0) break;
        plan.S.push_back(best);
        for (int i : edge_to_targets[best])
            if (!covered[i]) {
                covered[i] = 1;
                --remaining;
            }
    }
    return plan;
}

std::pair<PlanarGraph, RemovalPlan> eliminate_complex_triangles(const PlanarGraph& g,
                                                                const RemovalPlan& plan) {
    PlanarGraph cur = g;
    RemovalPlan done = plan;
    done.enodes.clear();
    Vid next = g.max_vertex_id() + 1;
    for (auto& [a, b] : plan.S) {
        if (!cur.has_edge(a, b)) throw precondition_error("removal edge missing");
        Vid u = next++;
        cur = cur.subdivide_edge(a, b, u);
        done.enodes.push_back(u);
    }
    return {cur, done};
}

namespace {

// Common subdivision step for both modifications: delete (x,y), insert u in
// the merged quad. Returns the graph and the two former apexes.
std::tuple<PlanarGraph, Vid, Vid> split_edge_with_vertex(const PlanarGraph& g, Vid x, Vid y,
                                                         Vid u) {
    auto [f1, f2] = g.faces_of_edge(x, y);
    auto apex = [&](const Face& f) {
        for (Vid v : f.vertices)
            if (v != x && v != y) return v;
        throw precondition_error("degenerate face");
    };
    Vid p = apex(f1), q = apex(f2);
    return {g.subdivide_edge(x, y, u), p, q};
}

} // namespace

std::pair<PlanarGraph, SiteL> modify_kl(const PlanarGraph& g, const SiteL& site) {
    if (!g.has_edge(site.a, site.b)) throw precondition_error("site edge (a,b) missing");
    if (g.edge_on_outer_face(site.a, site.b))
        throw precondition_error("site edge (a,b) lies on the outer face");
    auto seps = find_separating_triangles(g);
    for (auto& t : seps)
        if (!(t == site.triangle()))
            throw precondition_error("graph has separating triangles beyond the site");
    if (seps.empty() || !(seps[0] == site.triangle()))
        throw precondition_error("site triangle is no longer separating");

    auto [g2, p, q] = split_edge_with_vertex(g, site.a, site.b, g.max_vertex_id() + 1);
    SiteL s = site;
    s.u = g.max_vertex_id() + 1;
    // apexes of (a,b) are d and C1; adopt whichever is not d as C1
    s.C1 = (p == site.d) ? q : p;

    if (!find_separating_triangles(g2).empty())
        throw precondition_error("modification left a separating triangle");
    return {g2, s};
}

std::pair<PlanarGraph, SiteT> modify_kt(const PlanarGraph& g, const SiteT& site) {
    if (!g.has_edge(site.a, site.c)) throw precondition_error("site edge (a,c) missing");
    if (g.edge_on_outer_face(site.a, site.c))
        throw precondition_error("site edge (a,c) lies on the outer face");
    auto seps = find_separating_triangles(g);
    for (auto& t : seps)
        if (!(t == site.first()) && !(t == site.second()))
            throw precondition_error("graph has separating triangles beyond the site");
    if (seps.size() != 2) throw precondition_error("expected exactly the two site triangles");

    auto [g2, p, q] = split_edge_with_vertex(g, site.a, site.c, g.max_vertex_id() + 1);
    // apexes of (a,c) are e and f
    if (!((p == site.e && q == site.f) || (p == site.f && q == site.e)))
        throw precondition_error("site interior vertices do not bound the shared edge");
    SiteT s = site;
    s.u = g.max_vertex_id() + 1;

    if (!find_separating_triangles(g2).empty())
        throw precondition_error("modification left a separating triangle");
    return {g2, s};
}

} // namespace orthoplan
