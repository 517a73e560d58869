#include "orthoplan/rel.hpp"

#include <algorithm>
#include <list>
#include <map>

namespace orthoplan {

namespace {

bool is_skipped_edge(const CompletedGraph& cg, Vid a, Vid b) {
    // outer cycle edges and the auxiliary (N,S)
    auto pair_is = [&](Vid x, Vid y) { return (a == x && b == y) || (a == y && b == x); };
    return pair_is(cg.W, cg.S) || pair_is(cg.S, cg.E) || pair_is(cg.E, cg.N) ||
           pair_is(cg.N, cg.W) || pair_is(cg.N, cg.S);
}

// Insertion replay: contour as a vector-backed linked list over ranks.
struct Replay {
    const PlanarGraph& g;
    const CanonicalOrdering& ord;
    std::list<Vid> contour;
    std::map<Vid, std::list<Vid>::iterator> where;

    Replay(const CompletedGraph& cg, const CanonicalOrdering& ord_) : g(cg.graph), ord(ord_) {
        contour.push_back(cg.W);
        contour.push_back(cg.S);
        where[cg.W] = contour.begin();
        where[cg.S] = std::next(contour.begin());
    }

    // Insert v over its lower-neighbor run; returns the run lp..rp.
    std::vector<Vid> step(Vid v) {
        int rv = ord.rank.at(v);
        std::vector<Vid> lower;
        for (Vid w : g.neighbors(v))
            if (ord.rank.at(w) < rv) lower.push_back(w);
        if (lower.size() < 2)
            throw contour_broken_error("vertex with fewer than two lower neighbors");
        std::set<Vid> lowset(lower.begin(), lower.end());
        for (Vid w : lower)
            if (!where.count(w))
                throw contour_broken_error("lower neighbor not on the contour");
        // find the leftmost run member
        Vid first = lower[0];
        auto it = where.at(first);
        while (it != contour.begin()) {
            auto prev = std::prev(it);
            if (!lowset.count(*prev)) break;
            it = prev;
        }
        // walk right collecting the run
        std::vector<Vid> run;
        auto jt = it;
        while (jt != contour.end() && lowset.count(*jt)) {
            run.push_back(*jt);
            ++jt;
        }
        if (run.size() != lower.size())
            throw contour_broken_error("lower neighbors not consecutive on the contour");
        // replace the strict interior of the run by v
        Vid rp_vertex = run.back();
        auto lead = std::next(it);
        while (*lead != rp_vertex) {
            where.erase(*lead);
            lead = contour.erase(lead);
        }
        where[v] = contour.insert(lead, v);
        return run;
    }
};

std::vector<Vid> above_in_rotation(const PlanarGraph& g, const CanonicalOrdering& ord, Vid v) {
    const auto& rot = g.neighbors(v);
    int deg = static_cast<int>(rot.size());
    int rv = ord.rank.at(v);
    // contiguous cyclic arc of higher-ranked neighbors
    int start = -1;
    for (int i = 0; i < deg; ++i) {
        bool cur = ord.rank.at(rot[i]) > rv;
        bool prev = ord.rank.at(rot[(i - 1 + deg) % deg]) > rv;
        if (cur && !prev) start = i;
    }
    std::vector<Vid> out;
    if (start < 0) return out; // none or all above
    for (int i = 0; i < deg; ++i) {
        Vid w = rot[(start + i) % deg];
        if (ord.rank.at(w) > rv)
            out.push_back(w);
        else
            break;
    }
    return out;
}

} // namespace

std::vector<RelEdge> orient_edges(const CompletedGraph& cg, const CanonicalOrdering& ord) {
    if (!cg.ns_edge_present)
        throw precondition_error("expected the completed graph with (N,S) present");
    std::vector<RelEdge> out;
    for (auto& [a, b] : cg.graph.edge_list()) {
        if (is_skipped_edge(cg, a, b)) continue;
        RelEdge e;
        if (ord.rank.at(a) < ord.rank.at(b)) {
            e.tail = a;
            e.head = b;
        } else {
            e.tail = b;
            e.head = a;
        }
        out.push_back(e);
    }
    return out;
}

FanData fan_data(const CompletedGraph& cg, const CanonicalOrdering& ord) {
    FanData fd;
    Replay rp(cg, ord);
    int n = cg.graph.num_vertices();
    for (int r = 3; r <= n; ++r) {
        Vid v = ord.by_rank[r - 1];
        VertexFan f;
        f.v = v;
        f.rank = r;
        f.fan = rp.step(v);
        f.lp = f.fan.front();
        f.rp = f.fan.back();
        f.basic = *std::min_element(f.fan.begin(), f.fan.end(), [&](Vid x, Vid y) {
            return ord.rank.at(x) < ord.rank.at(y);
        });
        f.above = above_in_rotation(cg.graph, ord, v);
        fd.fans.push_back(std::move(f));
    }
    return fd;
}

Rel build_rel(const CompletedGraph& cg, const CanonicalOrdering& ord, EdgeLabel free_basic) {
    Rel rel;
    rel.graph = cg.graph;
    rel.N = cg.N;
    rel.E = cg.E;
    rel.S = cg.S;
    rel.W = cg.W;

    FanData fd = fan_data(cg, ord);
    for (auto& f : fd.fans) {
        int bpos = -1;
        for (int i = 0; i < static_cast<int>(f.fan.size()); ++i)
            if (f.fan[i] == f.basic) bpos = i;
        for (int i = 0; i < static_cast<int>(f.fan.size()); ++i) {
            Vid w = f.fan[i];
            if (is_skipped_edge(cg, w, f.v)) continue;
            RelEdge e;
            e.tail = w;
            e.head = f.v;
            if (f.v == cg.E) {
                e.label = EdgeLabel::T2;
            } else if (f.v == cg.N) {
                e.label = EdgeLabel::T1;
            } else if (i < bpos) {
                e.label = EdgeLabel::T2;
            } else if (i > bpos) {
                e.label = EdgeLabel::T1;
            } else if (bpos == 0) {
                e.label = EdgeLabel::T2; // basic at the left point
            } else if (bpos + 1 == static_cast<int>(f.fan.size())) {
                e.label = EdgeLabel::T1; // basic at the right point
            } else {
                e.label = free_basic;
            }
            rel.edges[PlanarGraph::edge_key(w, f.v)] = e;
        }
    }

    auto rep = validate_rel(rel);
    if (!rep.verdict()) throw rel_invalid_error("labeling fails: " + rep.first_failure());
    return rel;
}

Rel rel_for_t(const CompletedGraph& cg, const CanonicalOrdering& ord, EdgeLabel free_basic) {
    return build_rel(cg, ord, free_basic);
}

std::pair<Rel, MergeSelector> adjust_rel_for_l(const Rel& rel, const SiteL& site) {
    if (!site.u) throw precondition_error("site has no u vertex");
    Vid a = site.a, b = site.b, u = *site.u, C1 = site.C1;
    MergeSelector sel;
    if (rel.label(a, u) != rel.label(a, C1)) {
        sel.m = 1;
        return {rel, sel};
    }
    if (rel.label(b, u) != rel.label(b, C1)) {
        sel.m = 2;
        return {rel, sel};
    }
    // Case 3: flip around the second common neighbor of a and C1
    std::set<Vid> na(rel.graph.neighbors(a).begin(), rel.graph.neighbors(a).end());
    Vid x = -1;
    for (Vid w : rel.graph.neighbors(C1))
        if (na.count(w) && w != u) {
            if (x < 0 || w < x) x = w;
        }
    if (x < 0) throw flip_breaks_rel_error("no flip partner x in nbd(a) ∩ nbd(C1)");

    Rel out = rel;
    auto flip = [&](Vid p, Vid q) {
        auto& e = out.edges.at(PlanarGraph::edge_key(p, q));
        e.label = other(e.label);
        sel.flips_applied.push_back({std::min(p, q), std::max(p, q)});
    };
    if (!out.has(x, C1) || !out.has(a, C1))
        throw flip_breaks_rel_error("flip edges touch the frame");
    if (rel.label(a, C1) != rel.label(x, C1)) {
        flip(x, C1); // Subcase A: align (x,C1) first, then move (a,C1)
        flip(a, C1);
    } else {
        flip(a, C1); // Subcase B
    }
    sel.m = 1;
    auto rep = validate_rel(out);
    if (!rep.verdict())
        throw flip_breaks_rel_error("post-flip labeling invalid: " + rep.first_failure());
    return {out, sel};
}

ValidationReport validate_rel(const Rel& rel) {
    ValidationReport rep;
    const PlanarGraph& g = rel.graph;

    // Def-5(ii): frame conditions
    bool frame_ok = true;
    std::string fdetail;
    auto check_frame = [&](Vid dirv, EdgeLabel want, bool toward) {
        for (Vid w : g.neighbors(dirv)) {
            if (!rel.has(dirv, w)) continue; // outer-cycle / (N,S) edges
            const RelEdge& e = rel.at(dirv, w);
            bool ok = e.label == want && (toward ? e.head == dirv : e.tail == dirv);
            if (!ok) {
                frame_ok = false;
                fdetail = "direction vertex " + std::to_string(dirv);
            }
        }
    };
    check_frame(rel.N, EdgeLabel::T1, true);
    check_frame(rel.S, EdgeLabel::T1, false);
    check_frame(rel.W, EdgeLabel::T2, false);
    check_frame(rel.E, EdgeLabel::T2, true);
    rep.add("frame edge conditions", frame_ok, fdetail);

    // Def-5(i): four contiguous nonempty groups ccw at every interior vertex:
    // incoming T1, outgoing T2, outgoing T1, incoming T2.
    bool groups_ok = true;
    std::string gdetail;
    for (Vid v : g.vertex_ids()) {
        if (rel.is_direction(v)) continue;
        const auto& rot = g.neighbors(v);
        int deg = static_cast<int>(rot.size());
        std::vector<int> cls(deg, -1); // 0 inT1, 1 outT2, 2 outT1, 3 inT2
        bool missing = false;
        for (int i = 0; i < deg; ++i) {
            if (!rel.has(v, rot[i])) {
                missing = true;
                break;
            }
            const RelEdge& e = rel.at(v, rot[i]);
            bool incoming = e.head == v;
            if (e.label == EdgeLabel::T1)
                cls[i] = incoming ? 0 : 2;
            else
                cls[i] = incoming ? 3 : 1;
        }
        if (missing) {
            groups_ok = false;
            gdetail = "unlabeled interior edge at vertex " + std::to_string(v);
            break;
        }
        std::array<int, 4> count{};
        for (int c : cls) count[c] += 1;
        if (count[0] == 0 || count[1] == 0 || count[2] == 0 || count[3] == 0) {
            groups_ok = false;
            gdetail = "vertex " + std::to_string(v) + " missing a group";
            break;
        }
        // rotate to a position starting the inT1 block
        int start = -1;
        for (int i = 0; i < deg; ++i)
            if (cls[i] == 0 && cls[(i - 1 + deg) % deg] != 0) start = i;
        if (start < 0) {
            groups_ok = false;
            gdetail = "vertex " + std::to_string(v) + " has no inT1 block boundary";
            break;
        }
        int pos = 0;
        bool ok = true;
        for (int phase = 0; phase < 4 && ok; ++phase) {
            int c = phase; // expected class in ccw order
            int taken = 0;
            while (pos < deg && cls[(start + pos) % deg] == c) {
                ++pos;
                ++taken;
            }
            if (taken == 0) ok = false;
        }
        if (!(ok && pos == deg)) {
            groups_ok = false;
            gdetail = "vertex " + std::to_string(v) + " groups not contiguous in ccw order";
            break;
        }
    }
    rep.add("interior rotation pattern", groups_ok, gdetail);

    // unique extremes: in the T1 digraph only S is a source and only N a
    // sink; in T2 only W / E. Orientation follows ranks, so acyclicity is
    // structural.
    bool st_ok = true;
    std::string sdetail;
    std::map<Vid, std::array<int, 4>> io; // inT1, outT1, inT2, outT2
    for (auto& [k, e] : rel.edges) {
        (void)k;
        if (e.label == EdgeLabel::T1) {
            io[e.head][0] += 1;
            io[e.tail][1] += 1;
        } else {
            io[e.head][2] += 1;
            io[e.tail][3] += 1;
        }
    }
    for (auto& [v, c] : io) {
        bool in_t1 = c[0] > 0 || c[1] > 0;
        bool in_t2 = c[2] > 0 || c[3] > 0;
        if (in_t1 && c[0] == 0 && v != rel.S) {
            st_ok = false;
            sdetail = "unexpected T1 source " + std::to_string(v);
        }
        if (in_t1 && c[1] == 0 && v != rel.N) {
            st_ok = false;
            sdetail = "unexpected T1 sink " + std::to_string(v);
        }
        if (in_t2 && c[2] == 0 && v != rel.W) {
            st_ok = false;
            sdetail = "unexpected T2 source " + std::to_string(v);
        }
        if (in_t2 && c[3] == 0 && v != rel.E) {
            st_ok = false;
            sdetail = "unexpected T2 sink " + std::to_string(v);
        }
    }
    rep.add("digraph extremes", st_ok, sdetail);
    return rep;
}

} // namespace orthoplan
