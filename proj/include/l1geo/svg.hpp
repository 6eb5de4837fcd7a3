#pragma once

#include <string>
#include <vector>

#include "l1geo/geom.hpp"

namespace l1geo {

struct SvgLayer {
    std::vector<std::vector<Point>> polylines;
    std::string stroke = "#d33";
    bool closed = false;
};

// Deterministic rendering into a 1000x1000 viewbox: the polygon filled
// lightly, extra layers stroked, marks as dots.  Coordinates are decimal
// approximations for display only.
std::string render_svg(const Polygon& P, const std::vector<SvgLayer>& layers,
                       const std::vector<Point>& marks);

}  // namespace l1geo
