#pragma once

#include <string>
#include <vector>

#include "l1geo/geom.hpp"
#include "l1geo/scalar.hpp"

namespace testutil {

using l1geo::Point;
using l1geo::Polygon;
using l1geo::Scalar;

inline Scalar S(const std::string& s) { return *l1geo::parse_scalar(s); }

inline Polygon poly(std::vector<std::pair<std::string, std::string>> coords) {
    std::vector<Point> pts;
    for (auto& [x, y] : coords) pts.push_back(Point(S(x), S(y)));
    return Polygon::validate(std::move(pts));
}

// Unit diamond: diameter 2 between (1,0) and (-1,0), center point (0,0).
inline Polygon diamond() { return poly({{"1", "0"}, {"0", "1"}, {"-1", "0"}, {"0", "-1"}}); }

// Diamond with two vertices pushed in: diameter 17/7 between vertices 2 and
// 5, center segment (-1/7,-1/14)-(1/14,1/7) of radius 17/14.
inline Polygon pinched_diamond() {
    return poly({{"1", "0"},
                 {"0", "1"},
                 {"-5/7", "4/7"},
                 {"-1", "0"},
                 {"0", "-1"},
                 {"6/7", "-2/7"}});
}

// L shape with reflex vertex (1,1): diameter 4, radius 2, center segment
// (1/2,1/2)-(1,1).
inline Polygon l_shape() {
    return poly({{"0", "0"}, {"2", "0"}, {"2", "1"}, {"1", "1"}, {"1", "2"}, {"0", "2"}});
}

// Rectilinear spiral corridor of width 1 (20 vertices, many reflex turns).
inline Polygon spiral() {
    return poly({{"0", "0"}, {"9", "0"}, {"9", "9"}, {"1", "9"}, {"1", "2"},
                 {"7", "2"}, {"7", "7"}, {"3", "7"}, {"3", "4"}, {"5", "4"},
                 {"5", "5"}, {"4", "5"}, {"4", "6"}, {"6", "6"}, {"6", "3"},
                 {"2", "3"}, {"2", "8"}, {"8", "8"}, {"8", "1"}, {"0", "1"}});
}

// Comb with six unit teeth on a thin spine (24 vertices).
inline Polygon comb() {
    return poly({{"0", "0"},  {"11", "0"}, {"11", "4"}, {"10", "4"}, {"10", "1"}, {"9", "1"},
                 {"9", "4"},  {"8", "4"},  {"8", "1"},  {"7", "1"},  {"7", "4"},  {"6", "4"},
                 {"6", "1"},  {"5", "1"},  {"5", "4"},  {"4", "4"},  {"4", "1"},  {"3", "1"},
                 {"3", "4"},  {"2", "4"},  {"2", "1"},  {"1", "1"},  {"1", "4"},  {"0", "4"}});
}

inline std::vector<Polygon> corpus() {
    return {diamond(), pinched_diamond(), l_shape(), spiral(), comb()};
}

}  // namespace testutil
