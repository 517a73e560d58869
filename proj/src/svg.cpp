#include "orthoplan/svg.hpp"

#include <sstream>

namespace orthoplan {

namespace {

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                          "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};

} // namespace

std::string render_svg(const OrthoPlan& plan,
                       const std::unordered_map<Vid, std::string>& labels) {
    const int unit = 40;
    int w = (plan.bbox.x2 - plan.bbox.x1) * unit;
    int h = (plan.bbox.y2 - plan.bbox.y1) * unit;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
        << "\">\n<g>\n";
    // y axis flipped so larger y draws upward
    auto tx = [&](int x) { return (x - plan.bbox.x1) * unit; };
    auto ty = [&](int y) { return (plan.bbox.y2 - y) * unit; };
    for (auto& [v, poly] : plan.modules) {
        bool special = v == plan.designated;
        std::ostringstream d;
        for (size_t i = 0; i < poly.pts.size(); ++i)
            d << (i == 0 ? "M" : "L") << tx(poly.pts[i].x) << " " << ty(poly.pts[i].y);
        d << "Z";
        out << "<path d=\"" << d.str() << "\" fill=\""
            << (special ? "#e31a1c" : kPalette[v % 10]) << "\" stroke=\"#333\" stroke-width=\"2\"";
        if (special) out << " fill-opacity=\"0.85\"";
        out << "/>\n";
        int minx = poly.pts[0].x, maxx = poly.pts[0].x;
        int miny = poly.pts[0].y, maxy = poly.pts[0].y;
        for (auto& p : poly.pts) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
        auto it = labels.find(v);
        std::string name = it != labels.end() ? it->second : std::to_string(v);
        out << "<text x=\"" << (tx(minx) + tx(maxx)) / 2 << "\" y=\""
            << (ty(miny) + ty(maxy)) / 2
            << "\" font-size=\"18\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << name
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace orthoplan
