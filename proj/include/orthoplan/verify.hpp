#pragma once

#include "orthoplan/layout.hpp"

namespace orthoplan {

struct VerifyReport {
    ValidationReport tiling;
    std::vector<std::pair<Vid, Vid>> adjacency_missing; // in graph, not in plan
    std::vector<std::pair<Vid, Vid>> adjacency_extra;   // in plan, not in graph
    std::map<Vid, ShapeClass> shape_table;
    bool designated_ok = false;
    bool all_simple = false;

    bool verdict() const {
        return tiling.verdict() && adjacency_missing.empty() && adjacency_extra.empty() &&
               designated_ok && all_simple;
    }
};

// definitional oracle for the separating-triangle detector
std::vector<Triangle> brute_force_separating_triangles(const PlanarGraph& g);

// wall-adjacency graph of a plan (positive-length contact only)
std::vector<std::pair<Vid, Vid>> plan_adjacency(const std::map<Vid, std::vector<Rect>>& parts);
std::vector<std::pair<Vid, Vid>> plan_adjacency(const RectPlan& plan);
std::vector<std::pair<Vid, Vid>> plan_adjacency(const OrthoPlan& plan);

ValidationReport check_tiling(const std::map<Vid, std::vector<Rect>>& parts, const Rect& bbox);
ValidationReport check_tiling(const RectPlan& plan);
ValidationReport check_tiling(const OrthoPlan& plan);

VerifyReport check_plan_against_graph(const OrthoPlan& plan, const PlanarGraph& g_original,
                                      Vid designated, ShapeClass shape);

struct ProbeRow {
    int n = 0;
    double median_ms = 0.0;
};

std::vector<ProbeRow> scaling_probe(const std::vector<int>& sizes,
                                    const std::vector<std::uint64_t>& seeds);

} // namespace orthoplan
