#include "l1geo/center.hpp"

#include <algorithm>

namespace l1geo {

Point path_midpoint(const GeodesicPath& path) {
    const auto& w = path.waypoints;
    if (w.empty()) throw GeometryError("path_midpoint: empty path");
    if (w.size() == 1) return w.front();
    Scalar half = path.length / 2;
    Scalar acc = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        Scalar seg = l1_distance(w[i], w[i + 1]);
        if (acc + seg >= half) {
            Scalar t = (half - acc) / seg;
            return Point(w[i].x + t * (w[i + 1].x - w[i].x), w[i].y + t * (w[i + 1].y - w[i].y));
        }
        acc += seg;
    }
    return w.back();
}

ChordInterval vertex_interval(const Scalar& dva, const Scalar& dvb, const Scalar& rad,
                              const Scalar& L) {
    Scalar lo = dva - rad;
    if (lo < 0) lo = 0;
    Scalar over_b = dvb - rad;
    if (over_b < 0) over_b = 0;
    return {lo, L - over_b};
}

std::variant<Chord, DegeneratePoint> center_chord(const Triangulation& T, size_t v1, size_t v2,
                                                  const Scalar& rad) {
    const Polygon& P = T.polygon();
    Point m = path_midpoint(shortest_path(T, v1, v2));

    std::optional<Chord> best;
    Scalar best_len = 0;
    for (int sigma : {1, -1}) {
        Point fwd(1, sigma), bwd(-1, -sigma);
        Point pa = ray_shoot(P, m, bwd);
        Point pb = ray_shoot(P, m, fwd);
        if (pa == pb) continue;  // the line exits P immediately on both sides
        Chord c{pa, pb, sigma, l1_distance(pa, pb)};
        Scalar lo = 0, hi = c.length;
        for (size_t v : {v1, v2}) {
            ChordInterval iv = vertex_interval(geodesic_distance(T, P.vertex(v), pa),
                                               geodesic_distance(T, P.vertex(v), pb), rad,
                                               c.length);
            lo = std::max(lo, iv.lo);
            hi = std::min(hi, iv.hi);
        }
        if (lo > hi) continue;  // inconsistent: treat as degenerate candidate
        if (!best || hi - lo > best_len || (hi - lo == best_len && sigma == 1)) {
            best = c;
            best_len = hi - lo;
        }
    }
    if (!best || best_len == 0) return DegeneratePoint{m};
    return *best;
}

CenterResult center(const Polygon& P) {
    DiameterResult D = diameter(P);
    Scalar rad = D.value / 2;
    Triangulation T = Triangulation::build(P);

    auto cc = center_chord(T, D.pair.first, D.pair.second, rad);
    if (std::holds_alternative<DegeneratePoint>(cc)) {
        Point m = std::get<DegeneratePoint>(cc).m;
        ShortestPathTree spt = ShortestPathTree::build(T, m);
        Scalar ecc = 0;
        for (size_t v = 0; v < P.size(); ++v) ecc = std::max(ecc, spt.distance(v));
        if (ecc != rad)
            throw GeometryError("center: degenerate chord midpoint has eccentricity " +
                                format_scalar(ecc) + " != " + format_scalar(rad));
        return {rad, {m, m}};
    }

    const Chord& c = std::get<Chord>(cc);
    ShortestPathTree from_a = ShortestPathTree::build(T, c.a);
    ShortestPathTree from_b = ShortestPathTree::build(T, c.b);
    Scalar lo = 0, hi = c.length;
    for (size_t v = 0; v < P.size(); ++v) {
        ChordInterval iv = vertex_interval(from_a.distance(v), from_b.distance(v), rad, c.length);
        lo = std::max(lo, iv.lo);
        hi = std::min(hi, iv.hi);
    }
    if (lo > hi)
        throw GeometryError("center: vertex intervals have empty intersection");
    return {rad, {c.point_at(lo), c.point_at(hi)}};
}

}  // namespace l1geo
