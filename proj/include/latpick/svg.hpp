#ifndef LATPICK_SVG_HPP
#define LATPICK_SVG_HPP

#include <span>
#include <sstream>
#include <string>

#include "lattice_core.hpp"
#include "polygon.hpp"
#include "triangulation.hpp"

namespace latpick {

inline constexpr integer svg_pixels_per_unit = 32;

/** Draw the polygon outline, the triangulation edges (each distinct edge
once, in sorted order) and every lattice point of the polygon. Boundary
points are filled dots, interior points hollow rings. The y axis points up
and a one-unit margin surrounds the bounding box. Output depends only on the
inputs, so renders can be compared byte for byte. */
inline std::string render_svg(const Polygon &p,std::span<const ElementaryTriangle> tris) {
    const integer u = svg_pixels_per_unit;
    BoundingBox box = bounding_box(p.vertices());
    const integer width = (box.hi.x - box.lo.x + 2)*u;
    const integer height = (box.hi.y - box.lo.y + 2)*u;
    auto px = [&](LatticePoint q) {
        return std::to_string((q.x - box.lo.x + 1)*u) + "," + std::to_string((box.hi.y - q.y + 1)*u);
    };
    auto attr_xy = [&](const char *xn,const char *yn,LatticePoint q) {
        return std::string(xn) + "=\"" + std::to_string((q.x - box.lo.x + 1)*u) + "\" "
             + yn + "=\"" + std::to_string((box.hi.y - q.y + 1)*u) + "\"";
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

    os << "  <polygon class=\"outline\" points=\"";
    for(std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << px(p[i]);
    os << "\" fill=\"#dbe9f6\" stroke=\"#1f4e79\" stroke-width=\"3\"/>\n";

    os << "  <g class=\"triangulation\" stroke=\"#4a7ab0\" stroke-width=\"1\">\n";
    for(const auto &[e,count] : edge_usage(tris)) {
        (void)count;
        os << "    <line " << attr_xy("x1","y1",e.first) << ' ' << attr_xy("x2","y2",e.second) << "/>\n";
    }
    os << "  </g>\n";

    os << "  <g class=\"lattice-points\">\n";
    for(const LatticePoint &q : boundary_points(p))
        os << "    <circle class=\"boundary\" " << attr_xy("cx","cy",q) << " r=\"4\" fill=\"#000000\"/>\n";
    for(const LatticePoint &q : interior_points(p)) {
        os << "    <circle class=\"interior\" " << attr_xy("cx","cy",q)
           << " r=\"4\" fill=\"#ffffff\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace latpick

#endif
