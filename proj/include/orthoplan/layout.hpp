#pragma once

#include <map>

#include "orthoplan/rel.hpp"

namespace orthoplan {

struct Rect {
    int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    long long area() const {
        return static_cast<long long>(x2 - x1) * static_cast<long long>(y2 - y1);
    }
    bool valid() const { return x1 < x2 && y1 < y2; }
};

struct RectPlan {
    std::map<Vid, Rect> module;
    Rect bbox;
    Vid N = -1, E = -1, S = -1, W = -1; // frame ids while present, -1 after strip
};

struct Point {
    int x = 0, y = 0;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
};

struct RectilinearPolygon {
    std::vector<Point> pts; // ccw, collinear points removed, lex-min start
    long long area() const;
};

enum class ShapeClass { Rectangle, L, T, U, Z, Other };

const char* shape_name(ShapeClass s);

struct OrthoPlan {
    std::map<Vid, std::vector<Rect>> parts;         // merged rect sets
    std::map<Vid, RectilinearPolygon> modules;      // traced outlines
    std::map<Vid, ShapeClass> shapes;
    std::vector<std::pair<Vid, Vid>> merges;        // (from, into)
    Vid designated = -1;
    Rect bbox;
};

RectPlan rectangular_dual(const Rel& rel, const CanonicalOrdering& ord);

RectPlan strip_frame(const RectPlan& plan);

// Merge auxiliary modules back: every enode into one of its edge endpoints
// (rectangle-preserving union preferred, never degrading a protected
// module), then u into the designated target.
struct MergeRequest {
    RemovalPlan removal;                      // enodes with their edges
    Vid u = -1;                               // site vertex u
    std::vector<Vid> u_targets;               // try in order (a / b or a / c)
    ShapeClass want = ShapeClass::L;          // required shape of the target
};

OrthoPlan merge_rooms(const RectPlan& stripped, const MergeRequest& req);

ShapeClass classify_shape(const RectilinearPolygon& p);

RectilinearPolygon canonicalize_polygon(std::vector<Point> pts);

// Trace the outline of a set of interior-disjoint rectangles; throws
// self_intersecting_error when the union is not simply connected.
RectilinearPolygon polygon_of(const std::vector<Rect>& rects);

} // namespace orthoplan
