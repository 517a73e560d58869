#pragma once

#include "orthoplan/planar_graph.hpp"

namespace fixtures {

using orthoplan::PlanarGraph;
using orthoplan::Vid;

// octahedron: 4-connected, no separating triangles
inline PlanarGraph oct() {
    std::vector<std::pair<Vid, Vid>> e = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4},
                                          {4, 5}, {5, 2}, {6, 2}, {6, 3}, {6, 4}, {6, 5}};
    return orthoplan::build_graph(e, std::nullopt, std::vector<Vid>{1, 2, 3});
}

// complex triangle (1,2,4) with interior vertex 5
inline PlanarGraph g5() {
    std::vector<std::pair<Vid, Vid>> e = {{1, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 2},
                                          {4, 3}, {5, 1}, {5, 2}, {5, 4}};
    return orthoplan::build_graph(e, std::nullopt, std::vector<Vid>{1, 2, 3});
}

// two complex triangles (1,2,4) and (2,3,4) sharing edge (2,4)
inline PlanarGraph g6() {
    std::vector<std::pair<Vid, Vid>> e = {{1, 2}, {2, 3}, {3, 1}, {4, 1}, {4, 2}, {4, 3},
                                          {5, 1}, {5, 2}, {5, 4}, {6, 2}, {6, 3}, {6, 4}};
    return orthoplan::build_graph(e, std::nullopt, std::vector<Vid>{1, 2, 3});
}

inline PlanarGraph triangle() {
    std::vector<std::pair<Vid, Vid>> e = {{1, 2}, {2, 3}, {3, 1}};
    return orthoplan::build_graph(e, std::nullopt, std::vector<Vid>{1, 2, 3});
}

} // namespace fixtures
