#pragma once

#include <unordered_map>

#include "orthoplan/ordering.hpp"

namespace orthoplan {

enum class EdgeLabel { T1, T2 }; // T1: vertical adjacency (south->north), T2: horizontal (west->east)

inline EdgeLabel other(EdgeLabel l) { return l == EdgeLabel::T1 ? EdgeLabel::T2 : EdgeLabel::T1; }

struct RelEdge {
    Vid tail = -1, head = -1;
    EdgeLabel label = EdgeLabel::T1;
};

// Regular edge labeling over the completed graph. The four outer-cycle
// edges and the auxiliary (N,S) edge stay unlabeled.
struct Rel {
    PlanarGraph graph; // completed graph (rotation context)
    Vid N = -1, E = -1, S = -1, W = -1;
    std::unordered_map<std::uint64_t, RelEdge> edges; // key: edge_key(a,b)

    bool has(Vid a, Vid b) const { return edges.count(PlanarGraph::edge_key(a, b)) != 0; }
    const RelEdge& at(Vid a, Vid b) const { return edges.at(PlanarGraph::edge_key(a, b)); }
    EdgeLabel label(Vid a, Vid b) const { return at(a, b).label; }
    bool is_direction(Vid v) const { return v == N || v == E || v == S || v == W; }
};

struct VertexFan {
    Vid v = -1;
    int rank = 0;
    std::vector<Vid> fan;  // lower neighbors, lp..rp along the contour
    Vid lp = -1, rp = -1;
    Vid basic = -1;        // minimal-rank fan member
    std::vector<Vid> above; // higher-ranked neighbors, ccw rotation order
};

struct FanData {
    std::vector<VertexFan> fans; // ranks 3..n in order
};

struct MergeSelector {
    int m = 0; // 1: merge u into a, 2: into b
    std::vector<std::pair<Vid, Vid>> flips_applied;
};

// Rank orientation of all interior edges; outer cycle and (N,S) excluded.
std::vector<RelEdge> orient_edges(const CompletedGraph& cg, const CanonicalOrdering& ord);

FanData fan_data(const CompletedGraph& cg, const CanonicalOrdering& ord);

Rel build_rel(const CompletedGraph& cg, const CanonicalOrdering& ord,
              EdgeLabel free_basic = EdgeLabel::T1);

// T pipeline labeling: identical construction, no adjustment phase.
Rel rel_for_t(const CompletedGraph& cg, const CanonicalOrdering& ord,
              EdgeLabel free_basic = EdgeLabel::T1);

std::pair<Rel, MergeSelector> adjust_rel_for_l(const Rel& rel, const SiteL& site);

ValidationReport validate_rel(const Rel& rel);

} // namespace orthoplan
