#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "l1geo/geom.hpp"

namespace l1geo {

// Unordered pair of vertex indices forming a diagonal.
struct Diagonal {
    size_t a;
    size_t b;
    bool operator==(const Diagonal& o) const {
        return (a == o.a && b == o.b) || (a == o.b && b == o.a);
    }
};

struct SleeveStep {
    size_t tri;
    std::optional<Diagonal> entered_through;  // absent for the first triangle
};

// Ear-clipping triangulation with its dual tree.  Exactly n-2 triangles and
// n-3 diagonals; the dual is a tree rooted at triangle 0.
class Triangulation {
  public:
    static Triangulation build(const Polygon& P);

    const Polygon& polygon() const { return *poly_; }
    size_t triangle_count() const { return tris_.size(); }
    const std::array<size_t, 3>& triangle(size_t t) const { return tris_[t]; }
    const std::vector<std::array<size_t, 3>>& triangles() const { return tris_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }

    // Neighbor across edge j of triangle t (edge j runs tri[j] -> tri[j+1]),
    // or nullopt when that edge lies on the polygon boundary.
    std::optional<size_t> neighbor(size_t t, size_t j) const {
        return nbr_[t][j] == NONE ? std::nullopt : std::optional<size_t>(nbr_[t][j]);
    }

    // Some triangle containing the point (boundary-inclusive); throws
    // PointOutsidePolygon when the point is not in P.
    size_t find_triangle(const Point& x) const;
    // A triangle incident to polygon vertex v.
    size_t vertex_triangle(size_t v) const { return vert_tri_[v]; }

    // Unique dual-tree path between two triangles.
    std::vector<SleeveStep> sleeve(size_t from, size_t to) const;

  private:
    static constexpr size_t NONE = static_cast<size_t>(-1);

    const Polygon* poly_ = nullptr;
    std::vector<std::array<size_t, 3>> tris_;
    std::vector<std::array<size_t, 3>> nbr_;
    std::vector<Diagonal> diagonals_;
    std::vector<size_t> vert_tri_;
    std::vector<size_t> dual_parent_;     // parent triangle in dual tree, NONE for root
    std::vector<Diagonal> parent_diag_;   // diagonal shared with the parent
    std::vector<size_t> dual_depth_;
};

}  // namespace l1geo
