#include "orthoplan/json_io.hpp"

#include <fstream>

namespace orthoplan {

PlanarGraph graph_from_json(const json& j) {
    try {
        std::vector<std::pair<Vid, Vid>> edges;
        for (auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});

        std::optional<std::unordered_map<Vid, std::vector<Vid>>> rotation;
        if (j.contains("rotation")) {
            std::unordered_map<Vid, std::vector<Vid>> rot;
            for (auto& [k, v] : j.at("rotation").items())
                rot[std::stoi(k)] = v.get<std::vector<Vid>>();
            rotation = std::move(rot);
        }
        std::optional<std::vector<Vid>> outer;
        if (j.contains("outer_face")) outer = j.at("outer_face").get<std::vector<Vid>>();

        std::unordered_map<Vid, std::string> labels;
        if (j.contains("labels"))
            for (auto& [k, v] : j.at("labels").items()) labels[std::stoi(k)] = v.get<std::string>();

        return build_graph(edges, rotation, outer, labels);
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad graph json: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw parse_error("bad graph json: non-numeric key");
    }
}

PlanarGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid json in ") + path + ": " + e.what());
    }
    return graph_from_json(j);
}

json graph_to_json(const PlanarGraph& g) {
    json j;
    j["vertices"] = g.vertex_ids();
    json edges = json::array();
    for (auto& [a, b] : g.edge_list()) edges.push_back({a, b});
    j["edges"] = edges;
    json rot;
    for (Vid v : g.vertex_ids()) rot[std::to_string(v)] = g.neighbors(v);
    j["rotation"] = rot;
    j["outer_face"] = g.outer_face();
    if (!g.labels().empty()) {
        json labels;
        std::map<Vid, std::string> sorted(g.labels().begin(), g.labels().end());
        for (auto& [v, s] : sorted) labels[std::to_string(v)] = s;
        j["labels"] = labels;
    }
    return j;
}

json plan_to_json(const OrthoPlan& plan, const std::unordered_map<Vid, std::string>& labels) {
    json j;
    j["bbox"] = {plan.bbox.x1, plan.bbox.y1, plan.bbox.x2, plan.bbox.y2};
    json mods = json::array();
    for (auto& [v, poly] : plan.modules) {
        json m;
        m["id"] = v;
        auto it = labels.find(v);
        m["label"] = it != labels.end() ? it->second : std::to_string(v);
        json pts = json::array();
        for (auto& p : poly.pts) pts.push_back({p.x, p.y});
        m["polygon"] = pts;
        m["shape"] = shape_name(plan.shapes.at(v));
        mods.push_back(m);
    }
    j["modules"] = mods;
    j["designated"] = plan.designated;
    json merges = json::array();
    for (auto& [from, into] : plan.merges) merges.push_back({{"from", from}, {"into", into}});
    j["merges"] = merges;
    return j;
}

std::vector<Rect> polygon_to_rects(const RectilinearPolygon& poly) {
    // vertical slabs between consecutive x coordinates; horizontal edges
    // spanning a slab alternate bottom/top by y order
    std::vector<int> xs;
    for (auto& p : poly.pts) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    int n = static_cast<int>(poly.pts.size());
    struct HEdge {
        int y, x1, x2;
    };
    std::vector<HEdge> hs;
    for (int i = 0; i < n; ++i) {
        const Point& a = poly.pts[i];
        const Point& b = poly.pts[(i + 1) % n];
        if (a.y == b.y) hs.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
    }
    std::vector<Rect> out;
    for (size_t s = 0; s + 1 < xs.size(); ++s) {
        int lo = xs[s], hi = xs[s + 1];
        std::vector<int> ys;
        for (auto& h : hs)
            if (h.x1 <= lo && hi <= h.x2) ys.push_back(h.y);
        std::sort(ys.begin(), ys.end());
        if (ys.size() % 2) throw self_intersecting_error("odd edge parity in slab");
        for (size_t k = 0; k + 1 < ys.size(); k += 2)
            out.push_back({lo, ys[k], hi, ys[k + 1]});
    }
    return out;
}

OrthoPlan plan_from_json(const json& j) {
    try {
        OrthoPlan plan;
        auto bb = j.at("bbox");
        plan.bbox = {bb.at(0).get<int>(), bb.at(1).get<int>(), bb.at(2).get<int>(),
                     bb.at(3).get<int>()};
        for (auto& m : j.at("modules")) {
            Vid v = m.at("id").get<int>();
            std::vector<Point> pts;
            for (auto& p : m.at("polygon"))
                pts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
            plan.modules[v] = canonicalize_polygon(pts);
            plan.parts[v] = polygon_to_rects(plan.modules[v]);
            plan.shapes[v] = classify_shape(plan.modules[v]);
        }
        plan.designated = j.value("designated", -1);
        if (j.contains("merges"))
            for (auto& e : j.at("merges"))
                plan.merges.push_back({e.at("from").get<int>(), e.at("into").get<int>()});
        return plan;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad plan json: ") + e.what());
    }
}

OrthoPlan read_plan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid json in ") + path + ": " + e.what());
    }
    return plan_from_json(j);
}

json rel_to_json(const Rel& rel) {
    std::vector<std::pair<std::pair<Vid, Vid>, const RelEdge*>> sorted;
    for (auto& [k, e] : rel.edges) {
        (void)k;
        sorted.push_back({{std::min(e.tail, e.head), std::max(e.tail, e.head)}, &e});
    }
    std::sort(sorted.begin(), sorted.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    json arr = json::array();
    for (auto& [key, e] : sorted) {
        (void)key;
        arr.push_back({{"tail", e->tail},
                       {"head", e->head},
                       {"label", e->label == EdgeLabel::T1 ? "T1" : "T2"}});
    }
    return arr;
}

json ordering_to_json(const CanonicalOrdering& ord) {
    json j;
    json rank;
    std::map<Vid, int> sorted(ord.rank.begin(), ord.rank.end());
    for (auto& [v, r] : sorted) rank[std::to_string(v)] = r;
    j["rank"] = rank;
    j["category"] = category_name(ord.category);
    j["trace"] = ord.trace;
    return j;
}

json analysis_to_json(const PlanarGraph& g) {
    json j;
    json tris = json::array();
    for (auto& t : find_separating_triangles(g)) tris.push_back({t.v[0], t.v[1], t.v[2]});
    j["separating_triangles"] = tris;
    json kls = json::array();
    for (auto& s : find_kl(g))
        kls.push_back(
            {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"d", s.d}, {"C1", s.C1}});
    j["kl_sites"] = kls;
    json kts = json::array();
    for (auto& s : find_kt(g))
        kts.push_back({{"a", s.a},
                       {"b", s.b},
                       {"c", s.c},
                       {"d", s.d},
                       {"e", s.e},
                       {"f", s.f}});
    j["kt_sites"] = kts;
    return j;
}

json manifest_to_json(const PipelineResult& res, const std::string& command,
                      const std::string& input, const std::vector<std::string>& outputs) {
    json j;
    j["command"] = command;
    j["input"] = input;
    j["shape"] = res.kind == ShapeKind::L ? "l" : "t";
    if (res.kind == ShapeKind::L) {
        j["site"] = {{"a", res.site_l.a},
                     {"b", res.site_l.b},
                     {"c", res.site_l.c},
                     {"d", res.site_l.d},
                     {"C1", res.site_l.C1},
                     {"u", res.site_l.u.value_or(-1)}};
        j["category"] = category_name(res.category);
        j["m"] = res.m;
    } else {
        j["site"] = {{"a", res.site_t.a}, {"b", res.site_t.b}, {"c", res.site_t.c},
                     {"d", res.site_t.d}, {"e", res.site_t.e}, {"f", res.site_t.f},
                     {"u", res.site_t.u.value_or(-1)}};
    }
    json flips = json::array();
    for (auto& [a, b] : res.flips) flips.push_back({a, b});
    j["flips"] = flips;
    json enodes = json::array();
    for (size_t i = 0; i < res.removal.enodes.size(); ++i)
        enodes.push_back({{"edge", {res.removal.S[i].first, res.removal.S[i].second}},
                          {"vertex", res.removal.enodes[i]}});
    j["enodes"] = enodes;
    j["outputs"] = outputs;
    j["elapsed_ms"] = res.elapsed_ms;
    return j;
}

json verify_report_to_json(const VerifyReport& rep) {
    json j;
    json checks = json::array();
    for (auto& c : rep.tiling.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["tiling"] = checks;
    json miss = json::array(), extra = json::array();
    for (auto& [a, b] : rep.adjacency_missing) miss.push_back({a, b});
    for (auto& [a, b] : rep.adjacency_extra) extra.push_back({a, b});
    j["adjacency_missing"] = miss;
    j["adjacency_extra"] = extra;
    json shapes;
    for (auto& [v, s] : rep.shape_table) shapes[std::to_string(v)] = shape_name(s);
    j["shapes"] = shapes;
    j["designated_ok"] = rep.designated_ok;
    j["all_simple"] = rep.all_simple;
    j["verdict"] = rep.verdict();
    return j;
}

} // namespace orthoplan
