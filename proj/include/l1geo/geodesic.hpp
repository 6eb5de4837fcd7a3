#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "l1geo/triangulate.hpp"

namespace l1geo {

struct GeodesicPath {
    std::vector<Point> waypoints;  // from p to q, collinear interior points collapsed
    Scalar length;                 // total L1 length
};

// Shortest path between two points of P, computed by running a funnel along
// the sleeve of triangles between them.  Throws PointOutsidePolygon.
GeodesicPath shortest_path(const Triangulation& T, const Point& p, const Point& q);
Scalar geodesic_distance(const Triangulation& T, const Point& p, const Point& q);

// Vertex-to-vertex variants: skip point location by starting from a triangle
// incident to each vertex.
GeodesicPath shortest_path(const Triangulation& T, size_t u, size_t w);
Scalar geodesic_distance(const Triangulation& T, size_t u, size_t w);

// Shortest paths from one source to every polygon vertex, built by splitting
// funnels across the dual tree.  Each vertex gets a parent (the previous
// vertex on its geodesic) and an exact L1 geodesic distance.
class ShortestPathTree {
  public:
    static ShortestPathTree build(const Triangulation& T, const Point& source);

    const Point& source() const { return src_; }
    size_t size() const { return dist_.size(); }
    const Scalar& distance(size_t v) const { return dist_[v]; }
    // Previous vertex on the geodesic to v; nullopt when v attaches directly
    // to the source.
    std::optional<size_t> parent(size_t v) const {
        return par_[v] < 0 ? std::nullopt : std::optional<size_t>(size_t(par_[v]));
    }
    // Waypoints source ... v (collinear interior points collapsed).
    std::vector<Point> path_to(size_t v) const;
    // Vertices in the order the construction finalized them.
    const std::vector<size_t>& finish_order() const { return order_; }

    const Triangulation& triangulation() const { return *tri_; }

  private:
    const Triangulation* tri_ = nullptr;
    Point src_;
    std::vector<long> par_;  // -1 = source
    std::vector<Scalar> dist_;
    std::vector<size_t> order_;
};

// One star-shaped cell of a shortest path map.  Every point x of the cell has
// geodesic distance additive + l1(apex_point, x) from the map's source.
struct SpmCell {
    std::vector<Point> ring;     // CCW boundary
    std::optional<size_t> apex;  // vertex index; nullopt = the source itself
    Point apex_point;
    Scalar additive;  // geodesic distance from the source to the apex
};

// Decomposition of P into cells with a common last path vertex, obtained by
// extending every shortest-path-tree edge past its reflex endpoint.
class ShortestPathMap {
  public:
    static ShortestPathMap build(const Triangulation& T, const Point& source);

    const Point& source() const { return src_; }
    const ShortestPathTree& tree() const { return tree_; }
    const std::vector<SpmCell>& cells() const { return cells_; }
    const Triangulation& triangulation() const { return *tri_; }

    // Exact geodesic distance from the source; throws PointOutsidePolygon.
    Scalar query(const Point& x) const;
    size_t cell_containing(const Point& x) const;

  private:
    const Triangulation* tri_ = nullptr;
    Point src_;
    ShortestPathTree tree_;
    std::vector<SpmCell> cells_;
};

class ChordError : public GeometryError {
  public:
    explicit ChordError(const std::string& what) : GeometryError(what) {}
};

// Geodesic distance from the map's source restricted to a chord, as a
// piecewise-linear function of L1 arclength with slopes in {-1, 0, +1}.
struct ChordProfile {
    Point a;
    Point b;
    Scalar length;  // L1 length of the chord
    // Breakpoints (t, value); first t = 0, last t = length, slopes between
    // consecutive breakpoints are -1, 0 or +1 and adjacent slopes differ.
    std::vector<std::pair<Scalar, Scalar>> breaks;

    Scalar value_at(const Scalar& t) const;
    // Closed parameter interval where the profile is <= r; nullopt when the
    // minimum exceeds r.
    std::optional<std::pair<Scalar, Scalar>> sublevel(const Scalar& r) const;
};

// Requires the chord to be axis-parallel or of slope +-1 and to lie in P.
ChordProfile chord_profile(const ShortestPathMap& M, const Point& a, const Point& b);

}  // namespace l1geo
