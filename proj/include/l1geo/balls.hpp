#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "l1geo/geodesic.hpp"

namespace l1geo {

// The set of points within geodesic distance `radius` of `source`, as an
// explicit polygon.  Every boundary edge lies on the polygon boundary or has
// slope exactly +1 or -1.
struct GeodesicBall {
    Point source;
    Scalar radius;
    std::vector<Point> boundary;  // CCW ring; empty when radius < 0; a single
                                  // point when the ball degenerates to {source}

    bool empty() const { return boundary.empty(); }
    bool is_point() const { return boundary.size() == 1; }
};

// Clips each shortest-path-map cell to the L1 disk of the remaining radius
// about its apex and stitches the pieces along shared edges.
GeodesicBall geodesic_ball(const ShortestPathMap& M, const Scalar& r);

// Exact test geodesic_distance(s, x) <= r.  Throws PointOutsidePolygon.
bool ball_contains(const Triangulation& T, const Point& s, const Scalar& r, const Point& x);

// True iff the balls of radius r about p and q meet, i.e. d(p,q) <= 2r; the
// witness is the L1-arclength midpoint of the geodesic.
bool balls_intersect(const Triangulation& T, const Point& p, const Point& q, const Scalar& r);

// A point common to all three balls when one exists.  Candidates: every
// ball-boundary vertex, pairwise boundary-edge intersections, and the three
// sources; membership is tested by exact geodesic distance.
std::optional<Point> triple_common_point(const Triangulation& T, const GeodesicBall& b1,
                                         const GeodesicBall& b2, const GeodesicBall& b3);

// Samples random segments inside P; reports one whose intersection with the
// ball has two or more components (contradicting P-convexity), or nullopt.
std::optional<std::pair<Point, Point>> pconvexity_witness(const Triangulation& T,
                                                          const GeodesicBall& ball, size_t trials,
                                                          uint64_t seed);

}  // namespace l1geo
