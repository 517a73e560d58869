#include "orthoplan/verify.hpp"

#include <algorithm>
#include <chrono>

#include "orthoplan/generator.hpp"
#include "orthoplan/pipeline.hpp"

namespace orthoplan {

std::vector<Triangle> brute_force_separating_triangles(const PlanarGraph& g) {
    if (g.num_vertices() > 60) throw too_large_error("brute force capped at n <= 60");
    std::set<Triangle> faces3;
    for (auto& f : g.faces())
        if (f.vertices.size() == 3)
            faces3.insert(Triangle::of(f.vertices[0], f.vertices[1], f.vertices[2]));
    Triangle outer_t{};
    bool outer3 = g.outer_face().size() == 3;
    if (outer3) outer_t = Triangle::of(g.outer_face()[0], g.outer_face()[1], g.outer_face()[2]);

    std::vector<Vid> vs = g.vertex_ids();
    std::vector<Triangle> out;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) continue;
            for (size_t k = j + 1; k < vs.size(); ++k) {
                if (!g.has_edge(vs[i], vs[k]) || !g.has_edge(vs[j], vs[k])) continue;
                Triangle t = Triangle::of(vs[i], vs[j], vs[k]);
                if (faces3.count(t)) continue;
                if (outer3 && t == outer_t) continue;
                out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// maximal boundary segments of a module's rect set, per axis, with the side
// the interior lies on
struct Wall {
    int line;  // x for vertical, y for horizontal
    int lo, hi;
    int sign;  // +1 interior below/left of the wall, -1 above/right
    Vid owner;
};

std::pair<std::vector<Wall>, std::vector<Wall>> walls_of(
    const std::map<Vid, std::vector<Rect>>& parts) {
    std::vector<Wall> vert, horiz;
    for (auto& [v, rects] : parts) {
        std::map<int, std::map<int, int>> vev, hev;
        for (auto& r : rects) {
            vev[r.x1][r.y1] -= 1;
            vev[r.x1][r.y2] += 1;
            vev[r.x2][r.y1] += 1;
            vev[r.x2][r.y2] -= 1;
            hev[r.y1][r.x1] += 1;
            hev[r.y1][r.x2] -= 1;
            hev[r.y2][r.x1] -= 1;
            hev[r.y2][r.x2] += 1;
        }
        auto emit = [&](std::map<int, std::map<int, int>>& ev, std::vector<Wall>& out) {
            for (auto& [line, e] : ev) {
                int level = 0, start = 0;
                for (auto& [coord, delta] : e) {
                    if (level != 0 && coord > start) out.push_back({line, start, coord, level, v});
                    level += delta;
                    start = coord;
                }
            }
        };
        emit(vev, vert);
        emit(hev, horiz);
    }
    return {vert, horiz};
}

} // namespace

std::vector<std::pair<Vid, Vid>> plan_adjacency(const std::map<Vid, std::vector<Rect>>& parts) {
    auto [vert, horiz] = walls_of(parts);
    std::set<std::pair<Vid, Vid>> found;
    auto scan = [&](std::vector<Wall>& walls) {
        std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
            return std::tie(a.line, a.lo) < std::tie(b.line, b.lo);
        });
        for (size_t i = 0; i < walls.size(); ++i)
            for (size_t j = i + 1; j < walls.size(); ++j) {
                if (walls[j].line != walls[i].line) break;
                if (walls[j].lo >= walls[i].hi) break;
                const Wall& a = walls[i];
                const Wall& b = walls[j];
                if (a.owner == b.owner || a.sign == b.sign) continue;
                int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                if (hi - lo >= 1)
                    found.insert({std::min(a.owner, b.owner), std::max(a.owner, b.owner)});
            }
    };
    scan(vert);
    scan(horiz);
    return {found.begin(), found.end()};
}

std::vector<std::pair<Vid, Vid>> plan_adjacency(const RectPlan& plan) {
    std::map<Vid, std::vector<Rect>> parts;
    for (auto& [v, r] : plan.module) parts[v] = {r};
    return plan_adjacency(parts);
}

std::vector<std::pair<Vid, Vid>> plan_adjacency(const OrthoPlan& plan) {
    return plan_adjacency(plan.parts);
}

ValidationReport check_tiling(const std::map<Vid, std::vector<Rect>>& parts, const Rect& bbox) {
    ValidationReport rep;
    long long area = 0;
    bool inside = true;
    std::vector<std::pair<Rect, Vid>> rects;
    for (auto& [v, rs] : parts)
        for (auto& r : rs) {
            area += r.area();
            if (r.x1 < bbox.x1 || r.x2 > bbox.x2 || r.y1 < bbox.y1 || r.y2 > bbox.y2)
                inside = false;
            rects.push_back({r, v});
        }
    rep.add("modules inside the bounding box", inside);
    rep.add("area sum equals bounding box", area == bbox.area(),
            std::to_string(area) + " vs " + std::to_string(bbox.area()));

    bool disjoint = true;
    std::string witness;
    std::sort(rects.begin(), rects.end(), [](auto& a, auto& b) {
        return std::tie(a.first.x1, a.first.y1) < std::tie(b.first.x1, b.first.y1);
    });
    for (size_t i = 0; i < rects.size() && disjoint; ++i)
        for (size_t j = i + 1; j < rects.size(); ++j) {
            const Rect& a = rects[i].first;
            const Rect& b = rects[j].first;
            if (b.x1 >= a.x2) break; // sorted by x1
            if (std::max(a.x1, b.x1) < std::min(a.x2, b.x2) &&
                std::max(a.y1, b.y1) < std::min(a.y2, b.y2)) {
                disjoint = false;
                witness = "modules " + std::to_string(rects[i].second) + " and " +
                          std::to_string(rects[j].second) + " overlap";
                break;
            }
        }
    rep.add("pairwise interior-disjoint", disjoint, witness);
    return rep;
}

ValidationReport check_tiling(const RectPlan& plan) {
    std::map<Vid, std::vector<Rect>> parts;
    for (auto& [v, r] : plan.module) parts[v] = {r};
    return check_tiling(parts, plan.bbox);
}

ValidationReport check_tiling(const OrthoPlan& plan) { return check_tiling(plan.parts, plan.bbox); }

VerifyReport check_plan_against_graph(const OrthoPlan& plan, const PlanarGraph& g_original,
                                      Vid designated, ShapeClass shape) {
    VerifyReport rep;
    rep.tiling = check_tiling(plan);

    std::set<std::pair<Vid, Vid>> want;
    for (auto& e : g_original.edge_list()) want.insert(e);
    std::set<std::pair<Vid, Vid>> have;
    for (auto& e : plan_adjacency(plan)) have.insert(e);
    for (auto& e : want)
        if (!have.count(e)) rep.adjacency_missing.push_back(e);
    for (auto& e : have)
        if (!want.count(e)) rep.adjacency_extra.push_back(e);

    rep.shape_table = plan.shapes;
    rep.all_simple = true;
    for (auto& [v, poly] : plan.modules) {
        (void)v;
        if (poly.pts.size() < 4) rep.all_simple = false;
    }
    auto it = plan.shapes.find(designated);
    rep.designated_ok = it != plan.shapes.end() && it->second == shape;
    return rep;
}

std::vector<ProbeRow> scaling_probe(const std::vector<int>& sizes,
                                    const std::vector<std::uint64_t>& seeds) {
    std::vector<ProbeRow> rows;
    for (int n : sizes) {
        std::vector<double> times;
        for (auto seed : seeds) {
            GenSpec spec;
            spec.kind = ShapeKind::L;
            spec.n = n;
            spec.seed = seed;
            PlanarGraph g = generate_instance(spec);
            auto t0 = std::chrono::steady_clock::now();
            PipelineResult res = plan_l(g, {});
            auto t1 = std::chrono::steady_clock::now();
            (void)res;
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        ProbeRow row;
        row.n = n;
        row.median_ms = times.empty() ? 0.0 : times[times.size() / 2];
        rows.push_back(row);
    }
    return rows;
}

} // namespace orthoplan
