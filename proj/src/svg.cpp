#include "l1geo/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace l1geo {

std::string render_svg(const Polygon& P, const std::vector<SvgLayer>& layers,
                       const std::vector<Point>& marks) {
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const Point& p : P.vertices()) {
        min_x = std::min(min_x, to_double(p.x));
        max_x = std::max(max_x, to_double(p.x));
        min_y = std::min(min_y, to_double(p.y));
        max_y = std::max(max_y, to_double(p.y));
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    double scale = 900.0 / span;
    auto tx = [&](const Point& p) { return 50.0 + (to_double(p.x) - min_x) * scale; };
    auto ty = [&](const Point& p) { return 950.0 - (to_double(p.y) - min_y) * scale; };
    auto coords = [&](const std::vector<Point>& pts) {
        std::string s;
        char buf[64];
        for (const Point& p : pts) {
            snprintf(buf, sizeof buf, "%.3f,%.3f ", tx(p), ty(p));
            s += buf;
        }
        if (!s.empty()) s.pop_back();
        return s;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    out << "  <polygon points=\"" << coords(P.vertices())
        << "\" fill=\"#eef\" stroke=\"#336\" stroke-width=\"2\"/>\n";
    for (const SvgLayer& layer : layers) {
        for (const auto& pl : layer.polylines) {
            if (pl.size() == 1) {
                char buf[96];
                snprintf(buf, sizeof buf,
                         "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"%s\"/>\n", tx(pl[0]),
                         ty(pl[0]), layer.stroke.c_str());
                out << buf;
                continue;
            }
            out << (layer.closed ? "  <polygon points=\"" : "  <polyline points=\"") << coords(pl)
                << "\" fill=\"none\" stroke=\"" << layer.stroke << "\" stroke-width=\"2\"/>\n";
        }
    }
    for (const Point& m : marks) {
        char buf[96];
        snprintf(buf, sizeof buf, "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"5\" fill=\"#000\"/>\n",
                 tx(m), ty(m));
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace l1geo
