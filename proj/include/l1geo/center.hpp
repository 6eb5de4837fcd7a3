#pragma once

#include <utility>
#include <variant>

#include "l1geo/diameter.hpp"

namespace l1geo {

// Maximal slope +-1 segment through the interior, parametrized by L1
// arclength t in [0, length] from a to b.
struct Chord {
    Point a;
    Point b;
    int slope;  // +1 or -1
    Scalar length;

    Point point_at(const Scalar& t) const {
        return Point(a.x + (b.x - a.x) * t / length, a.y + (b.y - a.y) * t / length);
    }
};

struct ChordInterval {
    Scalar lo;
    Scalar hi;
    bool empty() const { return lo > hi; }
};

struct DegeneratePoint {
    Point m;
};

struct CenterResult {
    Scalar radius;
    std::pair<Point, Point> segment;  // equal endpoints for a point center

    bool is_point() const { return segment.first == segment.second; }
};

// Point at half the total L1 arclength along the path.
Point path_midpoint(const GeodesicPath& path);

// The chord supporting cen(P): tries both slopes through the midpoint of the
// diametral geodesic and keeps the one whose ball-interval intersection is
// longer; degenerates to the midpoint itself when both collapse.
std::variant<Chord, DegeneratePoint> center_chord(const Triangulation& T, size_t v1, size_t v2,
                                                  const Scalar& rad);

// Arclength interval of the chord within geodesic distance rad of a vertex v
// with d(v,a) = dva and d(v,b) = dvb.
ChordInterval vertex_interval(const Scalar& dva, const Scalar& dvb, const Scalar& rad,
                              const Scalar& L);

CenterResult center(const Polygon& P);

}  // namespace l1geo
