#include "orthoplan/completion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orthoplan {

namespace {

std::vector<Vid> outer_walk_from_min(const PlanarGraph& g) {
    std::vector<Vid> w = g.outer_face();
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
    return w;
}

// outer-cycle chords (edges between non-consecutive boundary vertices)
std::vector<std::pair<int, int>> boundary_chords(const PlanarGraph& g,
                                                 const std::vector<Vid>& walk) {
    int L = static_cast<int>(walk.size());
    std::map<Vid, int> pos;
    for (int i = 0; i < L; ++i) pos[walk[i]] = i;
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < L; ++i) {
        for (Vid nb : g.neighbors(walk[i])) {
            auto it = pos.find(nb);
            if (it == pos.end()) continue;
            int j = it->second;
            if (j <= i) continue;
            bool consecutive = (j == i + 1) || (i == 0 && j == L - 1);
            if (!consecutive) chords.push_back({i, j});
        }
    }
    return chords;
}

bool corners_valid(const std::array<int, 4>& c, int L,
                   const std::vector<std::pair<int, int>>& chords) {
    // arc i covers positions c[i]..c[i+1] (cyclic, inclusive)
    auto inside_arc = [&](int a0, int a1, int p) {
        // is position p in [a0, a1] walking forward cyclically?
        int span = (a1 - a0 + L) % L;
        int off = (p - a0 + L) % L;
        return off <= span;
    };
    for (auto& [x, y] : chords) {
        for (int i = 0; i < 4; ++i) {
            int a0 = c[i] % L, a1 = c[(i + 1) % 4] % L;
            if (inside_arc(a0, a1, x) && inside_arc(a0, a1, y)) return false;
        }
    }
    return true;
}

} // namespace

BoundaryArcs find_boundary_arcs(const PlanarGraph& g) {
    auto rep = validate_ptg(g);
    if (!rep.verdict()) throw precondition_error("not a PTG: " + rep.first_failure());
    auto walk = outer_walk_from_min(g);
    int L = static_cast<int>(walk.size());
    auto chords = boundary_chords(g, walk);

    std::array<int, 4> corners{};
    bool ok = false;
    // raw tuples are monotone with wrap: c0 <= c1 <= c2 <= c3 < c0 + L
    auto shape_ok = [&](const std::array<int, 4>& c) {
        int c0 = c[0], c1 = c[1], c2 = c[2], c3 = c[3];
        if (!(c0 <= c1 && c1 <= c2 && c2 <= c3 && c3 < c0 + L)) return false;
        if ((c2 - c0) % L == 0 || (c3 - c1) % L == 0) return false; // opposite corners coincide
        return true;
    };
    auto mod = [&](const std::array<int, 4>& c) {
        return std::array<int, 4>{c[0] % L, c[1] % L, c[2] % L, c[3] % L};
    };
    std::array<int, 4> even = {0, L / 4, (2 * L) / 4, (3 * L) / 4};
    if (shape_ok(even) && corners_valid(mod(even), L, chords)) {
        corners = mod(even);
        ok = true;
    } else {
        for (int c0 = 0; c0 < L && !ok; ++c0)
            for (int c1 = c0; c1 < c0 + L && !ok; ++c1)
                for (int c2 = c1; c2 < c0 + L && !ok; ++c2)
                    for (int c3 = c2; c3 < c0 + L && !ok; ++c3) {
                        std::array<int, 4> raw = {c0, c1, c2, c3};
                        if (!shape_ok(raw)) continue;
                        if (corners_valid(mod(raw), L, chords)) {
                            corners = mod(raw);
                            ok = true;
                        }
                    }
        if (!ok) throw too_many_cips_error("no corner assignment splits all boundary chords");
    }

    BoundaryArcs out;
    for (int i = 0; i < 4; ++i) {
        int a0 = corners[i] % L, a1 = corners[(i + 1) % 4] % L;
        std::vector<Vid> arc;
        int p = a0;
        arc.push_back(walk[p]);
        while (p != a1) {
            p = (p + 1) % L;
            arc.push_back(walk[p]);
        }
        out.arcs[i] = arc;
        out.corners[i] = walk[a1];
    }
    return out;
}

PlanarGraph boundary_subdivide(const PlanarGraph& g, Vid a, Vid b, Vid x) {
    if (!g.edge_on_outer_face(a, b)) throw precondition_error("edge not on outer face");
    auto [f1, f2] = g.faces_of_edge(a, b);
    const Face& inner = f1.is_outer ? f2 : f1;
    if (inner.is_outer) throw precondition_error("both faces outer");
    Vid apex = -1;
    for (Vid v : inner.vertices)
        if (v != a && v != b) apex = v;

    GraphBuilder bld(g);
    bld.replace_neighbor(a, b, x);
    bld.replace_neighbor(b, a, x);
    bld.add_vertex(x);
    // insert x between a and b in the apex rotation
    {
        auto& r = bld.rotation(apex);
        int n = static_cast<int>(r.size());
        bool done = false;
        for (int i = 0; i < n && !done; ++i) {
            Vid u = r[i], v = r[(i + 1) % n];
            if ((u == a && v == b) || (u == b && v == a)) {
                r.insert(r.begin() + i + 1, x);
                done = true;
            }
        }
        if (!done) throw precondition_error("apex rotation lacks a-b adjacency");
    }
    bld.set_rotation(x, {a, apex, b});
    // outer walk: a-b replaced by a-x-b
    std::vector<Vid> outer = g.outer_face();
    std::vector<Vid> new_outer;
    int L = static_cast<int>(outer.size());
    for (int i = 0; i < L; ++i) {
        Vid u = outer[i], v = outer[(i + 1) % L];
        new_outer.push_back(u);
        if ((u == a && v == b) || (u == b && v == a)) new_outer.push_back(x);
    }
    bld.set_outer_face(new_outer);
    try {
        return bld.finish();
    } catch (const error&) {
        bld.set_rotation(x, {b, apex, a});
        return bld.finish();
    }
}

CompletedGraph four_complete(const PlanarGraph& g_in, const BoundaryArcs& arcs_in) {
    PlanarGraph g = g_in;
    CompletedGraph out;
    BoundaryArcs arcs = arcs_in;

    // A length-3 boundary with interior vertices cannot be completed into a
    // 4-connected graph (the three boundary vertices form a cut); lengthen
    // the boundary by subdividing one outer edge first.
    if (g.outer_face().size() == 3 && g.num_vertices() > 3) {
        auto walk = outer_walk_from_min(g);
        // lexicographically smallest outer edge
        std::pair<Vid, Vid> best{-1, -1};
        for (size_t i = 0; i < walk.size(); ++i) {
            Vid a = walk[i], b = walk[(i + 1) % walk.size()];
            if (a > b) std::swap(a, b);
            if (best.first < 0 || std::make_pair(a, b) < best) best = {a, b};
        }
        Vid x = g.max_vertex_id() + 1;
        g = boundary_subdivide(g, best.first, best.second, x);
        out.boundary_split = {{best.first, best.second}, x};
        arcs = find_boundary_arcs(g);
    } else {
        // check the provided arcs cover this graph's outer walk
        std::set<Vid> given;
        for (auto& a : arcs.arcs) given.insert(a.begin(), a.end());
        std::set<Vid> outer(g.outer_face().begin(), g.outer_face().end());
        if (given != outer) throw arc_mismatch_error("arcs do not cover the outer cycle");
    }

    Vid base = g.max_vertex_id();
    out.W = base + 1;
    out.S = base + 2;
    out.E = base + 3;
    out.N = base + 4;
    std::array<Vid, 4> dir = {out.W, out.S, out.E, out.N}; // arc i -> dir[i]

    GraphBuilder bld(g);
    for (int i = 0; i < 4; ++i) bld.add_vertex(dir[i]);

    // rot(X) = [prev_dir, arc vertices in walk order, next_dir]
    for (int i = 0; i < 4; ++i) {
        std::vector<Vid> r;
        r.push_back(dir[(i + 3) % 4]);
        for (Vid v : arcs.arcs[i]) r.push_back(v);
        r.push_back(dir[(i + 1) % 4]);
        bld.set_rotation(dir[i], r);
    }

    // boundary vertices: insert direction vertices into the outer gap.
    // For vertex v with cw-walk neighbors (p, v, n) the stored rotation has
    // n immediately before p; directions go between them.
    auto walk = g.outer_face();
    int L = static_cast<int>(walk.size());
    std::map<Vid, std::pair<Vid, Vid>> walk_nbrs; // v -> (p, n)
    for (int i = 0; i < L; ++i)
        walk_nbrs[walk[i]] = {walk[(i - 1 + L) % L], walk[(i + 1) % L]};

    // Directions to splice into each boundary vertex's outer gap, ordered
    // n-side first: arc starting at v, then a single-vertex arc, then the
    // arc ending at v.
    std::map<Vid, std::vector<std::pair<int, Vid>>> keyed;
    for (int i = 0; i < 4; ++i) {
        auto& arc = arcs.arcs[i];
        if (arc.size() == 1) {
            keyed[arc[0]].push_back({1, dir[i]});
        } else {
            keyed[arc.front()].push_back({0, dir[i]});
            keyed[arc.back()].push_back({2, dir[i]});
            for (size_t k = 1; k + 1 < arc.size(); ++k) keyed[arc[k]].push_back({1, dir[i]});
        }
    }
    std::map<Vid, std::vector<Vid>> to_insert;
    for (auto& [v, lst] : keyed) {
        std::sort(lst.begin(), lst.end());
        for (auto& [k, d] : lst) to_insert[v].push_back(d);
    }

    for (auto& [v, dirs] : to_insert) {
        auto [p, n] = walk_nbrs.at(v);
        auto& r = bld.rotation(v);
        int sz = static_cast<int>(r.size());
        int pos = -1;
        for (int i = 0; i < sz; ++i)
            if (r[i] == n && r[(i + 1) % sz] == p) pos = i;
        if (pos < 0) throw arc_mismatch_error("boundary rotation lacks outer gap");
        r.insert(r.begin() + pos + 1, dirs.begin(), dirs.end());
    }

    bld.set_outer_face({out.N, out.W, out.S, out.E});
    out.graph = bld.finish();
    out.arcs_used = arcs;
    out.ns_edge_present = false;

    auto rep = validate_ptg(out.graph);
    if (!rep.verdict())
        throw arc_mismatch_error("completion is not a PTG: " + rep.first_failure());
    return out;
}

CompletedGraph add_ns_edge(const CompletedGraph& cg) {
    if (cg.ns_edge_present) throw precondition_error("(N,S) edge already present");
    CompletedGraph out = cg;
    GraphBuilder bld(cg.graph);
    // insert S into rot(N) in the outer gap (between W and E) and vice versa
    auto insert_gap = [&](Vid at, Vid before_ref, Vid ins) {
        auto& r = bld.rotation(at);
        auto it = std::find(r.begin(), r.end(), before_ref);
        if (it == r.end()) throw precondition_error("frame rotation broken");
        r.insert(it + 1, ins);
    };
    // rot(N) = [E, arc..., W]; append S after W. rot(S) = [W, arc..., E];
    // append N after E.
    insert_gap(cg.N, cg.W, cg.S);
    insert_gap(cg.S, cg.E, cg.N);
    bld.set_outer_face({cg.N, cg.W, cg.S});
    out.graph = bld.finish();
    out.ns_edge_present = true;

    // 4-connectivity post-check: exhaustive at desk scale, sampled beyond.
    int n = out.graph.num_vertices();
    if (n <= 60) {
        if (!connectivity_at_least(out.graph, 4))
            throw not_four_connected_error("completed graph is not 4-connected");
    } else {
        // deterministic sampled 3-cuts
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto rng = [&]() {
            state += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        };
        auto connected_without = [&](int a, int b, int c) {
            std::vector<char> seen(n, 0);
            seen[a] = seen[b] = seen[c] = 1;
            int start = -1;
            for (int i = 0; i < n; ++i)
                if (!seen[i]) {
                    start = i;
                    break;
                }
            if (start < 0) return true;
            std::vector<int> q{start};
            seen[start] = 1;
            size_t head = 0;
            int cnt = 1;
            while (head < q.size()) {
                int v = q[head++];
                for (Vid w : out.graph.neighbors(out.graph.id_of(v))) {
                    int wi = out.graph.index(w);
                    if (!seen[wi]) {
                        seen[wi] = 1;
                        q.push_back(wi);
                        ++cnt;
                    }
                }
            }
            return cnt == n - 3;
        };
        for (int trial = 0; trial < 500; ++trial) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
                c = static_cast<int>(rng() % n);
            if (a == b || b == c || a == c) continue;
            if (!connected_without(a, b, c))
                throw not_four_connected_error("sampled 3-cut disconnects completion");
        }
    }
    return out;
}

} // namespace orthoplan
