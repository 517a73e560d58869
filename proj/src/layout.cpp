#include "orthoplan/layout.hpp"

#include <algorithm>
#include <numeric>

namespace orthoplan {

const char* shape_name(ShapeClass s) {
    switch (s) {
        case ShapeClass::Rectangle: return "rectangle";
        case ShapeClass::L: return "L";
        case ShapeClass::T: return "T";
        case ShapeClass::U: return "U";
        case ShapeClass::Z: return "Z";
        default: return "other";
    }
}

long long RectilinearPolygon::area() const {
    long long a = 0;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % n];
        a += static_cast<long long>(p.x) * q.y - static_cast<long long>(q.x) * p.y;
    }
    return a / 2;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// longest path over the wall-class DAG given module edges lo->hi per vertex
std::vector<int> longest_paths(int classes, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> out(classes);
    std::vector<int> indeg(classes, 0);
    for (auto& [a, b] : arcs) {
        out[a].push_back(b);
        indeg[b] += 1;
    }
    std::vector<int> dist(classes, 0), q;
    for (int i = 0; i < classes; ++i)
        if (indeg[i] == 0) q.push_back(i);
    size_t head = 0;
    int seen = 0;
    while (head < q.size()) {
        int v = q[head++];
        ++seen;
        for (int w : out[v]) {
            dist[w] = std::max(dist[w], dist[v] + 1);
            if (--indeg[w] == 0) q.push_back(w);
        }
    }
    if (seen != classes) throw not_realizable_error("wall ordering is cyclic");
    return dist;
}

} // namespace

RectPlan rectangular_dual(const Rel& rel, const CanonicalOrdering& ord) {
    (void)ord;
    const PlanarGraph& g = rel.graph;
    int n = g.num_vertices();

    // wall classes: 2 per vertex and axis (low side, high side)
    UnionFind ux(2 * n), uy(2 * n);
    auto lo = [&](Vid v) { return 2 * g.index(v); };
    auto hi = [&](Vid v) { return 2 * g.index(v) + 1; };
    for (auto& [k, e] : rel.edges) {
        (void)k;
        if (e.label == EdgeLabel::T2)
            ux.unite(hi(e.tail), lo(e.head));
        else
            uy.unite(hi(e.tail), lo(e.head));
    }

    // compress classes
    auto compress = [&](UnionFind& uf) {
        std::map<int, int> remap;
        std::vector<int> cls(2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            int r = uf.find(i);
            auto it = remap.find(r);
            if (it == remap.end()) it = remap.insert({r, static_cast<int>(remap.size())}).first;
            cls[i] = it->second;
        }
        return std::make_pair(cls, static_cast<int>(remap.size()));
    };
    auto [xcls, xcount] = compress(ux);
    auto [ycls, ycount] = compress(uy);

    // module arcs; N,S have no T2 edges and W,E no T1 edges, so their
    // spans on that axis are pinned to the frame afterwards.
    std::vector<std::pair<int, int>> xarcs, yarcs;
    for (Vid v : g.vertex_ids()) {
        if (v != rel.N && v != rel.S) xarcs.push_back({xcls[lo(v)], xcls[hi(v)]});
        if (v != rel.W && v != rel.E) yarcs.push_back({ycls[lo(v)], ycls[hi(v)]});
    }
    auto xdist = longest_paths(xcount, xarcs);
    auto ydist = longest_paths(ycount, yarcs);

    RectPlan plan;
    plan.N = rel.N;
    plan.E = rel.E;
    plan.S = rel.S;
    plan.W = rel.W;
    for (Vid v : g.vertex_ids()) {
        Rect r;
        r.x1 = xdist[xcls[lo(v)]];
        r.x2 = xdist[xcls[hi(v)]];
        r.y1 = ydist[ycls[lo(v)]];
        r.y2 = ydist[ycls[hi(v)]];
        plan.module[v] = r;
    }
    // frame spans
    int width = plan.module[rel.E].x2;
    int height = plan.module[rel.N].y2;
    plan.module[rel.W].y1 = 0;
    plan.module[rel.W].y2 = height;
    plan.module[rel.E].y1 = 0;
    plan.module[rel.E].y2 = height;
    plan.module[rel.S].x1 = plan.module[rel.W].x2;
    plan.module[rel.S].x2 = plan.module[rel.E].x1;
    plan.module[rel.N].x1 = plan.module[rel.W].x2;
    plan.module[rel.N].x2 = plan.module[rel.E].x1;
    plan.bbox = {0, 0, width, height};

    for (auto& [v, r] : plan.module)
        if (!r.valid())
            throw not_realizable_error("empty extent for module " + std::to_string(v));
    return plan;
}

RectPlan strip_frame(const RectPlan& plan) {
    if (plan.N < 0) throw precondition_error("frame already stripped");
    RectPlan out;
    Rect w = plan.module.at(plan.W), e = plan.module.at(plan.E);
    Rect s = plan.module.at(plan.S), n = plan.module.at(plan.N);
    out.bbox = {w.x2, s.y2, e.x1, n.y1};
    for (auto& [v, r] : plan.module) {
        if (v == plan.N || v == plan.E || v == plan.S || v == plan.W) continue;
        out.module[v] = r;
    }
    out.N = out.E = out.S = out.W = -1;
    return out;
}

RectilinearPolygon canonicalize_polygon(std::vector<Point> pts) {
    if (pts.size() < 4) throw not_rectilinear_error("too few vertices");
    // drop consecutive duplicates
    std::vector<Point> q;
    for (auto& p : pts)
        if (q.empty() || !(q.back() == p)) q.push_back(p);
    while (q.size() > 1 && q.front() == q.back()) q.pop_back();
    // axis alignment
    int m = static_cast<int>(q.size());
    for (int i = 0; i < m; ++i) {
        const Point& a = q[i];
        const Point& b = q[(i + 1) % m];
        if (a.x != b.x && a.y != b.y) throw not_rectilinear_error("diagonal edge");
        if (a.x == b.x && a.y == b.y) throw zero_area_edge_error("zero-length edge");
    }
    // remove collinear points
    std::vector<Point> r;
    for (int i = 0; i < m; ++i) {
        const Point& prev = q[(i - 1 + m) % m];
        const Point& cur = q[i];
        const Point& next = q[(i + 1) % m];
        bool collinear = (prev.x == cur.x && cur.x == next.x) ||
                         (prev.y == cur.y && cur.y == next.y);
        if (!collinear) r.push_back(cur);
    }
    if (r.size() < 4) throw not_rectilinear_error("degenerate outline");
    // orientation: ccw
    long long a2 = 0;
    int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i)
        a2 += static_cast<long long>(r[i].x) * r[(i + 1) % k].y -
              static_cast<long long>(r[(i + 1) % k].x) * r[i].y;
    if (a2 == 0) throw zero_area_edge_error("zero-area polygon");
    if (a2 < 0) std::reverse(r.begin(), r.end());
    // simplicity: vertices must be distinct, edges must not reuse points
    {
        std::set<Point> uniq(r.begin(), r.end());
        if (uniq.size() != r.size()) throw self_intersecting_error("repeated vertex");
    }
    // lex-min start
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
    RectilinearPolygon poly;
    poly.pts = std::move(r);
    return poly;
}

RectilinearPolygon polygon_of(const std::vector<Rect>& rects) {
    if (rects.empty()) throw precondition_error("empty rect set");
    // signed boundary intervals per axis line; interiors are disjoint so the
    // net winding per interval is -1, 0 or 1
    struct Seg {
        int c;        // fixed coordinate (x for vertical, y for horizontal)
        int lo, hi;   // varying range
        int sign;     // +1 / -1 orientation
    };
    std::vector<Seg> vert, horiz;
    for (auto& r : rects) {
        if (!r.valid()) throw precondition_error("invalid rectangle");
        vert.push_back({r.x1, r.y1, r.y2, -1}); // left wall runs downward in ccw walk
        vert.push_back({r.x2, r.y1, r.y2, +1}); // right wall upward
        horiz.push_back({r.y1, r.x1, r.x2, +1}); // bottom rightward
        horiz.push_back({r.y2, r.x1, r.x2, -1}); // top leftward
    }
    // merge per line: net coverage via coordinate events
    auto net_segments = [](std::vector<Seg>& segs) {
        std::map<int, std::map<int, int>> events; // line -> coord -> delta
        for (auto& s : segs) {
            events[s.c][s.lo] += s.sign;
            events[s.c][s.hi] -= s.sign;
        }
        std::vector<Seg> out;
        for (auto& [line, ev] : events) {
            int level = 0;
            int start = 0;
            for (auto& [coord, delta] : ev) {
                if (level != 0) {
                    // close the running interval at this coordinate
                    if (coord > start) out.push_back({line, start, coord, level});
                }
                level += delta;
                start = coord;
                if (level > 1 || level < -1)
                    throw self_intersecting_error("overlapping rectangles in one module");
            }
            if (level != 0) throw self_intersecting_error("unbalanced boundary");
        }
        return out;
    };
    auto v = net_segments(vert);
    auto h = net_segments(horiz);

    // stitch directed edges: vertical sign +1 = upward (x = c), -1 downward;
    // horizontal sign +1 = rightward (y = c), -1 leftward
    std::map<Point, std::vector<std::pair<Point, int>>> out_edges; // from -> (to, used-flag idx)
    std::vector<char> used;
    std::vector<std::pair<Point, Point>> dirs;
    auto add_edge = [&](Point a, Point b) {
        dirs.push_back({a, b});
        used.push_back(0);
        out_edges[a].push_back({b, static_cast<int>(dirs.size() - 1)});
    };
    for (auto& s : v) {
        if (s.sign > 0)
            add_edge({s.c, s.lo}, {s.c, s.hi});
        else
            add_edge({s.c, s.hi}, {s.c, s.lo});
    }
    for (auto& s : h) {
        if (s.sign > 0)
            add_edge({s.c, s.lo}, {s.c, s.hi});
        else
            add_edge({s.c, s.hi}, {s.c, s.lo});
    }
    for (auto& [p, outs] : out_edges)
        if (outs.size() != 1)
            throw self_intersecting_error("boundary branches at a point (pinched union)");

    // walk the single loop
    Point start = dirs[0].first;
    for (auto& [a, b] : dirs) {
        (void)b;
        if (a < start) start = a;
    }
    std::vector<Point> walk;
    Point cur = start;
    size_t guard = 0;
    do {
        auto& outs = out_edges.at(cur);
        auto& [to, idx] = outs[0];
        if (used[idx]) throw self_intersecting_error("boundary revisits an edge");
        used[idx] = 1;
        walk.push_back(cur);
        cur = to;
        if (++guard > dirs.size() + 1) throw self_intersecting_error("boundary walk diverges");
    } while (!(cur == start));
    for (char u : used)
        if (!u) throw self_intersecting_error("disconnected union or interior hole");

    return canonicalize_polygon(walk);
}

ShapeClass classify_shape(const RectilinearPolygon& p) {
    int n = static_cast<int>(p.pts.size());
    if (n < 4) throw not_rectilinear_error("not a rectilinear polygon");
    std::vector<int> reflex_at;
    for (int i = 0; i < n; ++i) {
        const Point& a = p.pts[(i - 1 + n) % n];
        const Point& b = p.pts[i];
        const Point& c = p.pts[(i + 1) % n];
        long long cross = static_cast<long long>(b.x - a.x) * (c.y - b.y) -
                          static_cast<long long>(b.y - a.y) * (c.x - b.x);
        if (cross == 0) throw not_rectilinear_error("collinear vertex; canonicalize first");
        if (cross < 0) reflex_at.push_back(i); // clockwise turn on ccw walk
    }
    int reflex = static_cast<int>(reflex_at.size());
    if (n == 4 && reflex == 0) return ShapeClass::Rectangle;
    if (n == 6 && reflex == 1) return ShapeClass::L;
    if (n == 8 && reflex == 2) {
        int a = reflex_at[0], b = reflex_at[1];
        int gap1 = (b - a + n) % n - 1; // convex corners strictly between
        int gap2 = (a - b + n) % n - 1;
        int lo = std::min(gap1, gap2), hi = std::max(gap1, gap2);
        if (lo == 0 && hi == 6) return ShapeClass::U;
        if (lo == 2 && hi == 4) return ShapeClass::T;
        if (lo == 3 && hi == 3) return ShapeClass::Z;
    }
    return ShapeClass::Other;
}

namespace {

bool shares_wall(const std::vector<Rect>& a, const std::vector<Rect>& b) {
    for (auto& r : a)
        for (auto& s : b) {
            if (r.x2 == s.x1 || s.x2 == r.x1) {
                int x = (r.x2 == s.x1) ? r.x2 : s.x2;
                (void)x;
                int lo = std::max(r.y1, s.y1), hi = std::min(r.y2, s.y2);
                if ((r.x2 == s.x1 || s.x2 == r.x1) && hi - lo >= 1) return true;
            }
            if (r.y2 == s.y1 || s.y2 == r.y1) {
                int lo = std::max(r.x1, s.x1), hi = std::min(r.x2, s.x2);
                if (hi - lo >= 1) return true;
            }
        }
    return false;
}

bool union_is_rectangle(const std::vector<Rect>& a, const std::vector<Rect>& b) {
    std::vector<Rect> all = a;
    all.insert(all.end(), b.begin(), b.end());
    try {
        return classify_shape(polygon_of(all)) == ShapeClass::Rectangle;
    } catch (const error&) {
        return false;
    }
}

} // namespace

OrthoPlan merge_rooms(const RectPlan& stripped, const MergeRequest& req) {
    if (stripped.N >= 0) throw precondition_error("strip the frame before merging");
    OrthoPlan plan;
    plan.bbox = stripped.bbox;
    for (auto& [v, r] : stripped.module) plan.parts[v] = {r};

    std::set<Vid> protected_targets(req.u_targets.begin(), req.u_targets.end());

    auto do_merge = [&](Vid from, Vid into) {
        if (!plan.parts.count(from) || !plan.parts.count(into))
            throw precondition_error("merge endpoint missing from plan");
        if (!shares_wall(plan.parts.at(from), plan.parts.at(into)))
            throw not_adjacent_error("merge partners share no wall of positive length");
        auto& dst = plan.parts.at(into);
        for (auto& r : plan.parts.at(from)) dst.push_back(r);
        plan.parts.erase(from);
        plan.merges.push_back({from, into});
    };

    // enode merges first: rectangle-preserving union preferred, otherwise
    // avoid the module that must end in the designated shape
    for (size_t i = 0; i < req.removal.enodes.size(); ++i) {
        Vid en = req.removal.enodes[i];
        Vid a = req.removal.S[i].first, b = req.removal.S[i].second;
        if (!plan.parts.count(en)) continue; // already absorbed
        auto pick = [&]() -> Vid {
            bool a_ok = plan.parts.count(a), b_ok = plan.parts.count(b);
            if (!a_ok && !b_ok) throw not_adjacent_error("no merge endpoint available");
            if (a_ok && union_is_rectangle(plan.parts[en], plan.parts[a])) return a;
            if (b_ok && union_is_rectangle(plan.parts[en], plan.parts[b])) return b;
            if (a_ok && !protected_targets.count(a)) return a;
            if (b_ok && !protected_targets.count(b)) return b;
            return a_ok ? a : b;
        };
        do_merge(en, pick());
    }

    // designated merge: first target whose union classifies as requested
    if (req.u >= 0) {
        Vid chosen = -1;
        for (Vid t : req.u_targets) {
            if (!plan.parts.count(t) || !plan.parts.count(req.u)) continue;
            std::vector<Rect> all = plan.parts[t];
            all.insert(all.end(), plan.parts[req.u].begin(), plan.parts[req.u].end());
            try {
                if (classify_shape(polygon_of(all)) == req.want) {
                    chosen = t;
                    break;
                }
            } catch (const error&) {
            }
        }
        if (chosen < 0) chosen = req.u_targets.front(); // fall back; caller inspects shape
        do_merge(req.u, chosen);
        plan.designated = chosen;
    }

    for (auto& [v, rects] : plan.parts) {
        plan.modules[v] = polygon_of(rects);
        plan.shapes[v] = classify_shape(plan.modules[v]);
    }
    return plan;
}

} // namespace orthoplan
