#pragma once

#include <stdexcept>
#include <string>

namespace orthoplan {

// Base for all pipeline errors. The CLI maps subclasses to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};
struct non_planar_error : error {
    using error::error;
};
struct inconsistent_rotation_error : error {
    using error::error;
};
struct unknown_outer_face_error : error {
    using error::error;
};
struct too_few_vertices_error : error {
    using error::error;
};
struct unhittable_error : error {
    using error::error;
};
struct edge_on_outer_face_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct too_many_cips_error : error {
    using error::error;
};
struct arc_mismatch_error : error {
    using error::error;
};
struct not_four_connected_error : error {
    using error::error;
};
struct stuck_error : error {
    using error::error;
};
struct no_category_error : error {
    using error::error;
};
struct contour_broken_error : error {
    using error::error;
};
struct rel_invalid_error : error {
    using error::error;
};
struct flip_breaks_rel_error : error {
    using error::error;
};
struct not_realizable_error : error {
    using error::error;
};
struct not_adjacent_error : error {
    using error::error;
};
struct not_rectilinear_error : error {
    using error::error;
};
struct self_intersecting_error : error {
    using error::error;
};
struct zero_area_edge_error : error {
    using error::error;
};
struct no_site_error : error {
    using error::error;
};
struct too_large_error : error {
    using error::error;
};

} // namespace orthoplan
