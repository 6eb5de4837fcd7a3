#include "l1geo/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace l1geo {

bool point_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

bool direction_ccw_less(const Point& a, const Point& b) {
    auto half = [](const Point& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.x * b.y - a.y * b.x > 0;
}

static Scalar cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation_sign(const Point& p, const Point& q, const Point& r) {
    return sign(cross(p, q, r));
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    switch (orientation_sign(p, q, r)) {
        case 1:
            return Orientation::CCW;
        case -1:
            return Orientation::CW;
        default:
            return Orientation::Collinear;
    }
}

Scalar l1_distance(const Point& p, const Point& q) {
    return abs(p.x - q.x) + abs(p.y - q.y);
}

bool on_segment(const Point& a, const Point& b, const Point& x) {
    if (orientation_sign(a, b, x) != 0) return false;
    return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= x.y && x.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation_sign(a, b, c);
    int o2 = orientation_sign(a, b, d);
    int o3 = orientation_sign(c, d, a);
    int o4 = orientation_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation_sign(a, b, c);
    int o2 = orientation_sign(a, b, d);
    int o3 = orientation_sign(c, d, a);
    int o4 = orientation_sign(c, d, b);
    return o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 && o1 != o2 && o3 != o4;
}

std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                       const Point& d) {
    Scalar r_x = b.x - a.x, r_y = b.y - a.y;
    Scalar s_x = d.x - c.x, s_y = d.y - c.y;
    Scalar denom = r_x * s_y - r_y * s_x;
    if (denom == 0) return std::nullopt;
    Scalar t = ((c.x - a.x) * s_y - (c.y - a.y) * s_x) / denom;
    return Point(a.x + t * r_x, a.y + t * r_y);
}

// ---------------------------------------------------------------------------
// Polygon validation

namespace {

Scalar signed_area2_of(const std::vector<Point>& v) {
    Scalar s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

// Conservative bucket grid over edge bounding boxes; doubles are used only
// to pick buckets, every reported pair is verified exactly.
class EdgeGrid {
  public:
    EdgeGrid(const std::vector<Point>& verts, size_t cells_hint) {
        n_ = verts.size();
        xs_.reserve(n_);
        ys_.reserve(n_);
        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        for (const Point& p : verts) {
            double x = to_double(p.x), y = to_double(p.y);
            xs_.push_back(x);
            ys_.push_back(y);
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
        double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        dim_ = std::max<size_t>(1, static_cast<size_t>(std::sqrt(double(cells_hint))));
        cell_ = span / double(dim_) * (1.0 + 1e-12);
        org_x_ = min_x;
        org_y_ = min_y;
        buckets_.resize(dim_ * dim_);
        for (size_t e = 0; e < n_; ++e) insert(e);
    }

    // Edges whose grid footprint overlaps edge e's footprint, id > e.
    std::vector<size_t> candidates_after(size_t e) const {
        std::vector<size_t> out;
        auto [lo_x, hi_x, lo_y, hi_y] = footprint(e);
        std::set<size_t> seen;
        for (size_t cx = lo_x; cx <= hi_x; ++cx)
            for (size_t cy = lo_y; cy <= hi_y; ++cy)
                for (size_t other : buckets_[cx * dim_ + cy])
                    if (other > e && seen.insert(other).second) out.push_back(other);
        return out;
    }

  private:
    std::tuple<size_t, size_t, size_t, size_t> footprint(size_t e) const {
        size_t a = e, b = (e + 1) % n_;
        double lo_x = std::min(xs_[a], xs_[b]), hi_x = std::max(xs_[a], xs_[b]);
        double lo_y = std::min(ys_[a], ys_[b]), hi_y = std::max(ys_[a], ys_[b]);
        return {clampi((lo_x - org_x_) / cell_), clampi((hi_x - org_x_) / cell_),
                clampi((lo_y - org_y_) / cell_), clampi((hi_y - org_y_) / cell_)};
    }
    size_t clampi(double v) const {
        if (!(v > 0)) return 0;
        size_t i = static_cast<size_t>(v);
        return std::min(i, dim_ - 1);
    }
    void insert(size_t e) {
        auto [lo_x, hi_x, lo_y, hi_y] = footprint(e);
        for (size_t cx = lo_x; cx <= hi_x; ++cx)
            for (size_t cy = lo_y; cy <= hi_y; ++cy) buckets_[cx * dim_ + cy].push_back(e);
    }

    size_t n_ = 0, dim_ = 1;
    double cell_ = 1, org_x_ = 0, org_y_ = 0;
    std::vector<double> xs_, ys_;
    std::vector<std::vector<size_t>> buckets_;
};

}  // namespace

Polygon Polygon::validate(std::vector<Point> raw) {
    if (raw.size() < 3)
        throw ValidationError(ValidationError::Kind::TooFewVertices, "polygon needs >= 3 vertices");

    // Drop duplicate and collinear-run vertices until stable.
    std::vector<Point> v = std::move(raw);
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        std::vector<Point> next;
        next.reserve(v.size());
        size_t n = v.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = v[(i + n - 1) % n];
            const Point& cur = v[i];
            const Point& nxt = v[(i + 1) % n];
            if (cur == prev) {
                changed = true;
                continue;
            }
            if (cur != nxt && orientation_sign(prev, cur, nxt) == 0 && on_segment(prev, nxt, cur)) {
                changed = true;
                continue;
            }
            next.push_back(cur);
        }
        v = std::move(next);
    }
    if (v.size() < 3)
        throw ValidationError(ValidationError::Kind::DegenerateArea,
                              "polygon degenerates after canonicalization");

    // Simplicity: non-adjacent edges must not intersect at all; adjacent
    // edges may share only their common endpoint.  Checked before the area
    // sign so self-crossing zero-area input reports NotSimple.
    size_t n = v.size();
    EdgeGrid grid(v, 4 * n);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        for (size_t j : grid.candidates_after(i)) {
            const Point& c = v[j];
            const Point& d = v[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segments_intersect(a, b, c, d))
                    throw ValidationError(ValidationError::Kind::NotSimple,
                                          "edges " + std::to_string(i) + " and " +
                                              std::to_string(j) + " intersect");
            } else {
                const Point& shared = (j == i + 1) ? b : a;
                // With collinear runs removed, adjacent edges overlap beyond
                // the shared vertex only when one doubles back over the other.
                const Point& tip_i = (j == i + 1) ? a : b;
                const Point& tip_j = (j == i + 1) ? d : c;
                if (orientation_sign(tip_i, shared, tip_j) == 0 &&
                    (on_segment(shared, tip_i, tip_j) || on_segment(shared, tip_j, tip_i)))
                    throw ValidationError(ValidationError::Kind::NotSimple,
                                          "edges " + std::to_string(i) + " and " +
                                              std::to_string(j) + " overlap");
            }
        }
    }

    Scalar area2 = signed_area2_of(v);
    if (area2 == 0)
        throw ValidationError(ValidationError::Kind::DegenerateArea, "polygon has zero area");
    if (area2 < 0) std::reverse(v.begin(), v.end());
    return Polygon(std::move(v));
}

Scalar Polygon::signed_area2() const { return signed_area2_of(verts_); }

Location locate_in_ring(const std::vector<Point>& ring, const Point& x) {
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (on_segment(a, b, x)) return {Location::Kind::Boundary, x == b ? (i + 1) % n : i};
    }
    // Crossing count with a ray toward +x; half-open rule on edge endpoints.
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if ((a.y > x.y) != (b.y > x.y)) {
            Scalar xi = a.x + (x.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xi > x.x) inside = !inside;
        }
    }
    return {inside ? Location::Kind::Interior : Location::Kind::Exterior, 0};
}

Location locate_point(const Polygon& P, const Point& x) { return locate_in_ring(P.vertices(), x); }

Scalar ring_area2(const std::vector<Point>& ring) { return signed_area2_of(ring); }

Point interior_point_of_ring(const std::vector<Point>& ring) {
    size_t n = ring.size();
    if (n < 3) throw GeometryError("interior_point_of_ring: too few vertices");
    // Lowest-leftmost vertex is strictly convex for a CCW ring.
    size_t b = 0;
    for (size_t i = 1; i < n; ++i)
        if (point_less(ring[i], ring[b])) b = i;
    const Point& pa = ring[(b + n - 1) % n];
    const Point& pb = ring[b];
    const Point& pc = ring[(b + 1) % n];
    // Other ring vertices inside triangle (pa,pb,pc) block the centroid;
    // pair pb with the blocker farthest from line (pa,pc) instead.
    std::optional<size_t> far;
    Scalar far_val = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i == b || i == (b + n - 1) % n || i == (b + 1) % n) continue;
        const Point& q = ring[i];
        if (orientation_sign(pa, pb, q) >= 0 && orientation_sign(pb, pc, q) >= 0 &&
            orientation_sign(pc, pa, q) > 0) {
            Scalar d = (pc.x - pa.x) * (pb.y - q.y) - (pc.y - pa.y) * (pb.x - q.x);
            d = abs(d);
            if (!far || d > far_val) {
                far = i;
                far_val = d;
            }
        }
    }
    Point cand = far ? Point((pb.x + ring[*far].x) / 2, (pb.y + ring[*far].y) / 2)
                     : Point((pa.x + pb.x + pc.x) / 3, (pa.y + pb.y + pc.y) / 3);
    if (locate_in_ring(ring, cand).kind == Location::Kind::Interior) return cand;
    // Degenerate shapes: fall back to midpoints of pb with every other vertex.
    for (size_t i = 0; i < n; ++i) {
        Point m((pb.x + ring[i].x) / 2, (pb.y + ring[i].y) / 2);
        if (locate_in_ring(ring, m).kind == Location::Kind::Interior) return m;
    }
    throw GeometryError("interior_point_of_ring: no interior point found");
}

Point ray_shoot(const Polygon& P, const Point& origin, const Point& dir) {
    if (dir.x == 0 && dir.y == 0) throw GeometryError("ray_shoot: zero direction");
    std::optional<Scalar> best;
    Point tip(origin.x + dir.x, origin.y + dir.y);
    auto consider = [&](const Scalar& t) {
        if (t > 0 && (!best || t < *best)) best = t;
    };
    // Parameter of point p on the ray line, using the larger component.
    auto ray_param = [&](const Point& p) -> Scalar {
        if (dir.x != 0) return (p.x - origin.x) / dir.x;
        return (p.y - origin.y) / dir.y;
    };
    for (size_t i = 0; i < P.size(); ++i) {
        auto [a, b] = P.edge(i);
        Scalar denom = dir.x * (b.y - a.y) - dir.y * (b.x - a.x);
        if (denom == 0) {
            // Parallel; collinear edges contribute their endpoints.
            if (orientation_sign(origin, tip, a) == 0) {
                consider(ray_param(a));
                consider(ray_param(b));
            }
            continue;
        }
        Scalar t = ((a.x - origin.x) * (b.y - a.y) - (a.y - origin.y) * (b.x - a.x)) / denom;
        Scalar u = ((a.x - origin.x) * dir.y - (a.y - origin.y) * dir.x) / denom;
        if (u >= 0 && u <= 1) consider(t);
    }
    if (!best) return origin;
    Point hit(origin.x + *best * dir.x, origin.y + *best * dir.y);
    // The open stretch before the first hit is uniformly inside or outside.
    Point mid((origin.x + hit.x) / 2, (origin.y + hit.y) / 2);
    if (!locate_point(P, mid).inside()) return origin;
    return hit;
}

bool segment_in_polygon(const Polygon& P, const Point& a, const Point& b) {
    if (!locate_point(P, a).inside() || !locate_point(P, b).inside()) return false;
    if (a == b) return true;
    // Cut [a,b] at every boundary contact and classify each open piece.
    std::vector<Scalar> ts{Scalar(0), Scalar(1)};
    auto seg_param = [&](const Point& p) -> Scalar {
        if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
        return (p.y - a.y) / (b.y - a.y);
    };
    for (size_t i = 0; i < P.size(); ++i) {
        auto [c, d] = P.edge(i);
        if (!segments_intersect(a, b, c, d)) continue;
        Scalar r_x = b.x - a.x, r_y = b.y - a.y;
        Scalar s_x = d.x - c.x, s_y = d.y - c.y;
        Scalar denom = r_x * s_y - r_y * s_x;
        if (denom != 0) {
            Scalar t = ((c.x - a.x) * s_y - (c.y - a.y) * s_x) / denom;
            if (t >= 0 && t <= 1) ts.push_back(t);
        } else {
            for (const Point* p : {&c, &d})
                if (on_segment(a, b, *p)) ts.push_back(seg_param(*p));
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Scalar tm = (ts[i] + ts[i + 1]) / 2;
        Point m(a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y));
        if (!locate_point(P, m).inside()) return false;
    }
    return true;
}

bool segment_points_monotone(const std::vector<Point>& pts) {
    int sx = 0, sy = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        int dx = sign(pts[i + 1].x - pts[i].x);
        int dy = sign(pts[i + 1].y - pts[i].y);
        if (dx != 0) {
            if (sx != 0 && dx != sx) return false;
            sx = dx;
        }
        if (dy != 0) {
            if (sy != 0 && dy != sy) return false;
            sy = dy;
        }
    }
    return true;
}

}  // namespace l1geo
