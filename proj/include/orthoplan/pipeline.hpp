#pragma once

#include <optional>

#include "orthoplan/generator.hpp"
#include "orthoplan/layout.hpp"

namespace orthoplan {

struct PipelineOptions {
    std::optional<int> site_index;           // among sorted candidates
    EdgeLabel free_basic = EdgeLabel::T1;
};

struct PipelineResult {
    ShapeKind kind = ShapeKind::L;
    SiteL site_l;
    SiteT site_t;
    RemovalPlan removal;       // including any boundary-split vertex
    CompletedGraph completed;
    CanonicalOrdering ordering;
    Category category = Category::None;
    int m = 0;                 // L merge selector; 0 for T
    std::vector<std::pair<Vid, Vid>> flips;
    Rel rel;
    RectPlan dual;             // with frame
    RectPlan stripped;
    OrthoPlan plan;
    double elapsed_ms = 0.0;
};

PipelineResult plan_l(const PlanarGraph& g, const PipelineOptions& opts);
PipelineResult plan_t(const PlanarGraph& g, const PipelineOptions& opts);

} // namespace orthoplan
