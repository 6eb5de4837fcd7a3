#include "l1geo/random_polygon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <set>

namespace l1geo {

namespace {

// Conservative bucket grid over tour edges; exact checks on candidates.
struct TourGrid {
    size_t n, dim;
    double cell, org_x, org_y;
    std::vector<double> xs, ys;
    std::vector<std::vector<size_t>> buckets;

    TourGrid(const std::vector<Point>& pts, const std::vector<size_t>& order) {
        n = order.size();
        xs.resize(n);
        ys.resize(n);
        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        for (size_t i = 0; i < n; ++i) {
            xs[i] = to_double(pts[order[i]].x);
            ys[i] = to_double(pts[order[i]].y);
            min_x = std::min(min_x, xs[i]);
            max_x = std::max(max_x, xs[i]);
            min_y = std::min(min_y, ys[i]);
            max_y = std::max(max_y, ys[i]);
        }
        double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        dim = std::max<size_t>(1, size_t(std::sqrt(double(n))));
        cell = span / double(dim) * (1.0 + 1e-12);
        org_x = min_x;
        org_y = min_y;
        buckets.assign(dim * dim, {});
        for (size_t e = 0; e < n; ++e) {
            auto [lx, hx, ly, hy] = footprint(e);
            for (size_t cx = lx; cx <= hx; ++cx)
                for (size_t cy = ly; cy <= hy; ++cy) buckets[cx * dim + cy].push_back(e);
        }
    }
    size_t clampi(double v) const {
        if (!(v > 0)) return 0;
        return std::min(size_t(v), dim - 1);
    }
    std::array<size_t, 4> footprint(size_t e) const {
        size_t a = e, b = (e + 1) % n;
        return {clampi((std::min(xs[a], xs[b]) - org_x) / cell),
                clampi((std::max(xs[a], xs[b]) - org_x) / cell),
                clampi((std::min(ys[a], ys[b]) - org_y) / cell),
                clampi((std::max(ys[a], ys[b]) - org_y) / cell)};
    }
    template <typename F>
    void candidates_after(size_t e, F&& f) const {
        auto [lx, hx, ly, hy] = footprint(e);
        std::set<size_t> seen;
        for (size_t cx = lx; cx <= hx; ++cx)
            for (size_t cy = ly; cy <= hy; ++cy)
                for (size_t o : buckets[cx * dim + cy])
                    if (o > e && seen.insert(o).second) f(o);
    }
};

// One untangling step: find a pair of conflicting tour edges and reverse the
// span between them.  Returns false when the tour is already simple.
bool untangle_step(const std::vector<Point>& pts, std::vector<size_t>& order) {
    size_t n = order.size();
    TourGrid grid(pts, order);
    auto pt = [&](size_t i) -> const Point& { return pts[order[i % n]]; };
    for (size_t e1 = 0; e1 < n; ++e1) {
        std::optional<size_t> hit;
        grid.candidates_after(e1, [&](size_t e2) {
            if (hit) return;
            bool adjacent = e2 == e1 + 1 || (e1 == 0 && e2 == n - 1);
            if (adjacent) return;  // shared-endpoint overlaps are left to validation
            if (segments_intersect(pt(e1), pt(e1 + 1), pt(e2), pt(e2 + 1))) hit = e2;
        });
        if (hit) {
            std::reverse(order.begin() + long(e1) + 1, order.begin() + long(*hit) + 1);
            return true;
        }
    }
    return false;
}

}  // namespace

Polygon random_polygon(size_t n, uint64_t seed) {
    if (n < 3) throw GeometryError("random_polygon: need n >= 3");
    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + attempt);
        long span = long(8) * long(n) * long(n) + 64;
        std::uniform_int_distribution<long> coord(0, span - 1);
        std::set<std::pair<long, long>> used;
        std::vector<Point> pts;
        while (pts.size() < n) {
            std::pair<long, long> p{coord(rng), coord(rng)};
            if (used.insert(p).second) pts.push_back(Point(p.first, p.second));
        }

        // Start from the angular order around the centroid (nearly simple),
        // then 2-opt away the remaining conflicts.
        Scalar cx = 0, cy = 0;
        for (const Point& p : pts) {
            cx += p.x;
            cy += p.y;
        }
        cx /= long(n);
        cy /= long(n);
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
            Point di(pts[i].x - cx, pts[i].y - cy), dj(pts[j].x - cx, pts[j].y - cy);
            if (direction_ccw_less(di, dj)) return true;
            if (direction_ccw_less(dj, di)) return false;
            return l1_distance(pts[i], Point(cx, cy)) < l1_distance(pts[j], Point(cx, cy));
        });

        bool ok = true;
        for (size_t steps = 0; untangle_step(pts, order); ++steps) {
            if (steps > 8 * n) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        std::vector<Point> ring;
        ring.reserve(n);
        for (size_t i : order) ring.push_back(pts[i]);
        try {
            Polygon P = Polygon::validate(std::move(ring));
            if (P.size() == n) return P;
        } catch (const ValidationError&) {
        }
    }
    throw GeometryError("random_polygon: no simple polygon after 64 attempts");
}

}  // namespace l1geo
