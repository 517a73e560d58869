#pragma once

#include <array>
#include <optional>

#include "orthoplan/planar_graph.hpp"

namespace orthoplan {

struct BoundaryArcs {
    std::array<std::vector<Vid>, 4> arcs; // P1..P4 along the outer walk
    std::array<Vid, 4> corners;           // shared endpoint of arc i and i+1
};

struct CompletedGraph {
    PlanarGraph graph;
    Vid N = -1, E = -1, S = -1, W = -1;
    bool ns_edge_present = false;
    BoundaryArcs arcs_used;
    // When the outer cycle had length 3 with a nonempty interior, one outer
    // edge is subdivided first so the completion can be 4-connected; the
    // inserted vertex is merged back like any Enode.
    std::optional<std::pair<std::pair<Vid, Vid>, Vid>> boundary_split;

    Vid direction_of_arc(int i) const {
        switch (i) {
            case 0: return W;
            case 1: return S;
            case 2: return E;
            default: return N;
        }
    }
};

BoundaryArcs find_boundary_arcs(const PlanarGraph& g);

CompletedGraph four_complete(const PlanarGraph& g, const BoundaryArcs& arcs);

CompletedGraph add_ns_edge(const CompletedGraph& cg);

// Subdivide outer edge (a,b): new vertex x on the boundary adjacent to a, b
// and the inner apex. Used to lengthen length-3 boundaries.
PlanarGraph boundary_subdivide(const PlanarGraph& g, Vid a, Vid b, Vid x);

} // namespace orthoplan
