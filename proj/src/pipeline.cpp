#include "orthoplan/pipeline.hpp"

#include <chrono>

namespace orthoplan {

namespace {

void require_ptg(const PlanarGraph& g) {
    auto rep = validate_ptg(g);
    if (!rep.verdict()) throw precondition_error("input is not a PTG: " + rep.first_failure());
}

CompletedGraph complete_with_ns(const PlanarGraph& g, RemovalPlan& removal) {
    auto arcs = find_boundary_arcs(g);
    CompletedGraph cg = four_complete(g, arcs);
    if (cg.boundary_split) {
        removal.S.push_back(cg.boundary_split->first);
        removal.enodes.push_back(cg.boundary_split->second);
    }
    return add_ns_edge(cg);
}

} // namespace

PipelineResult plan_l(const PlanarGraph& g, const PipelineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    require_ptg(g);

    auto sites = find_kl(g);
    if (sites.empty()) throw no_site_error("the graph contains no K_L configuration");
    int idx = opts.site_index.value_or(0);
    if (idx < 0 || idx >= static_cast<int>(sites.size()))
        throw no_site_error("site index out of range");
    SiteL chosen = sites[idx];

    RemovalPlan removal = select_removal_edges(g, {chosen.triangle()});
    auto [g1, removal_done] = eliminate_complex_triangles(g, removal);

    // relocate the protected site on the eliminated graph (its C1 pool may
    // have changed); keep the same triangle and interior vertex
    SiteL site;
    bool found = false;
    for (auto& s : find_kl(g1)) {
        if (s.triangle() == chosen.triangle() && s.d == chosen.d) {
            site = s;
            found = true;
            break;
        }
    }
    if (!found) throw no_site_error("protected site vanished during elimination");

    auto [g2, site_u] = modify_kl(g1, site);
    PipelineResult res;
    res.kind = ShapeKind::L;
    res.removal = removal_done;
    res.completed = complete_with_ns(g2, res.removal);
    res.site_l = site_u;

    auto orderings = prioritized_orderings(res.completed, site_u);
    if (orderings.empty())
        throw no_category_error("no category admits a priority ordering (Lemma 1 violation)");

    std::string last_failure = "designated module never classified as L";
    for (auto& [ord, cat] : orderings) {
        try {
            Rel rel0 = build_rel(res.completed, ord, opts.free_basic);
            auto [rel, sel] = adjust_rel_for_l(rel0, site_u);
            RectPlan dual = rectangular_dual(rel, ord);
            RectPlan stripped = strip_frame(dual);
            MergeRequest req;
            req.removal = res.removal;
            req.u = *site_u.u;
            req.u_targets = {sel.m == 1 ? site_u.a : site_u.b};
            req.want = ShapeClass::L;
            OrthoPlan plan = merge_rooms(stripped, req);
            if (plan.shapes.at(plan.designated) != ShapeClass::L) continue;

            res.ordering = ord;
            res.category = cat;
            res.m = sel.m;
            res.flips = sel.flips_applied;
            res.rel = rel;
            res.dual = dual;
            res.stripped = stripped;
            res.plan = plan;
            res.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return res;
        } catch (const error& e) {
            last_failure = e.what();
        }
    }
    throw no_category_error("all categories failed: " + last_failure);
}

PipelineResult plan_t(const PlanarGraph& g, const PipelineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    require_ptg(g);

    auto sites = find_kt(g);
    if (sites.empty()) throw no_site_error("the graph contains no K_T configuration");
    int idx = opts.site_index.value_or(0);
    if (idx < 0 || idx >= static_cast<int>(sites.size()))
        throw no_site_error("site index out of range");
    SiteT chosen = sites[idx];

    RemovalPlan removal = select_removal_edges(g, {chosen.first(), chosen.second()});
    auto [g1, removal_done] = eliminate_complex_triangles(g, removal);

    SiteT site;
    bool found = false;
    for (auto& s : find_kt(g1)) {
        if (s.first() == chosen.first() && s.second() == chosen.second()) {
            site = s;
            found = true;
            break;
        }
    }
    if (!found) throw no_site_error("protected site vanished during elimination");

    auto [g2, site_u] = modify_kt(g1, site);
    PipelineResult res;
    res.kind = ShapeKind::T;
    res.removal = removal_done;
    res.completed = complete_with_ns(g2, res.removal);
    res.site_t = site_u;

    res.ordering = canonical_order(res.completed);
    res.category = Category::None;
    res.rel = rel_for_t(res.completed, res.ordering, opts.free_basic);
    res.dual = rectangular_dual(res.rel, res.ordering);
    res.stripped = strip_frame(res.dual);

    MergeRequest req;
    req.removal = res.removal;
    req.u = *site_u.u;
    req.u_targets = {site_u.a, site_u.c};
    req.want = ShapeClass::T;
    res.plan = merge_rooms(res.stripped, req);
    if (res.plan.shapes.at(res.plan.designated) != ShapeClass::T)
        throw no_category_error("designated module did not classify as T");

    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace orthoplan
