#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "l1geo/scalar.hpp"

namespace l1geo {

struct Point {
    Scalar x;
    Scalar y;

    Point() = default;
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic order, used for map keys and canonical candidate ordering.
bool point_less(const Point& a, const Point& b);

// CCW order on direction vectors, starting at the positive x axis; exact.
bool direction_ccw_less(const Point& a, const Point& b);

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

// Sign of the cross product (q-p) x (r-p), exact.
Orientation orientation(const Point& p, const Point& q, const Point& r);
int orientation_sign(const Point& p, const Point& q, const Point& r);

Scalar l1_distance(const Point& p, const Point& q);

// True when x lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& x);

// True when the closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// True when the segments cross at a single point interior to both.
bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d);

// Intersection point of two non-parallel lines through (a,b) and (c,d).
std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                       const Point& d);

class GeometryError : public std::runtime_error {
  public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public GeometryError {
  public:
    enum class Kind { TooFewVertices, DegenerateArea, NotSimple };
    ValidationError(Kind kind, const std::string& what) : GeometryError(what), kind(kind) {}
    Kind kind;
};

class PointOutsidePolygon : public GeometryError {
  public:
    explicit PointOutsidePolygon(const std::string& what = "point outside polygon")
        : GeometryError(what) {}
};

// Simple polygon with exact rational vertices in counterclockwise order.
// Construction canonicalizes: CW input is reversed, duplicate vertices and
// collinear runs are merged, and simplicity is verified exactly.
class Polygon {
  public:
    static Polygon validate(std::vector<Point> raw);

    size_t size() const { return verts_.size(); }
    const Point& vertex(size_t i) const { return verts_[i]; }
    const std::vector<Point>& vertices() const { return verts_; }
    // Edge i runs from vertex i to vertex (i+1) mod n.
    std::pair<Point, Point> edge(size_t i) const {
        return {verts_[i], verts_[(i + 1) % verts_.size()]};
    }

    Scalar signed_area2() const;  // twice the signed area (positive, CCW)

  private:
    explicit Polygon(std::vector<Point> verts) : verts_(std::move(verts)) {}
    std::vector<Point> verts_;
};

struct Location {
    enum class Kind { Interior, Boundary, Exterior } kind;
    // For Boundary: index of the edge the point lies on (vertex i reports
    // edge i, the edge starting at that vertex).
    size_t edge = 0;
    bool inside() const { return kind != Kind::Exterior; }
};

Location locate_point(const Polygon& P, const Point& x);

// Same classification against a raw closed vertex ring (no validation).
Location locate_in_ring(const std::vector<Point>& ring, const Point& x);

Scalar ring_area2(const std::vector<Point>& ring);

// A point strictly inside a simple CCW ring.
Point interior_point_of_ring(const std::vector<Point>& ring);

// First point of the boundary strictly hit by the open ray from origin in
// direction dir.  Returns origin itself when the ray exits P immediately.
Point ray_shoot(const Polygon& P, const Point& origin, const Point& dir);

// True when the closed segment [a,b] lies entirely in P (boundary included).
bool segment_in_polygon(const Polygon& P, const Point& a, const Point& b);

// A path is monotone when every vertical and horizontal line meets it in at
// most one component; then its L1 length equals the endpoint L1 distance.
bool segment_points_monotone(const std::vector<Point>& pts);

}  // namespace l1geo
