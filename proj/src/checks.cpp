#include "l1geo/checks.hpp"

#include <algorithm>
#include <random>

#include "l1geo/balls.hpp"
#include "l1geo/center.hpp"
#include "l1geo/diameter.hpp"
#include "l1geo/io.hpp"
#include "l1geo/oracle.hpp"
#include "l1geo/smawk.hpp"

namespace l1geo {

namespace {

struct Sampler {
    const Polygon& P;
    std::mt19937_64 rng;
    Scalar min_x, max_x, min_y, max_y;

    Sampler(const Polygon& P, uint64_t seed) : P(P), rng(seed) {
        min_x = max_x = P.vertex(0).x;
        min_y = max_y = P.vertex(0).y;
        for (const Point& p : P.vertices()) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    Point bbox_point() {
        std::uniform_int_distribution<int> grid(0, 1 << 10);
        Scalar fx(grid(rng), 1 << 10), fy(grid(rng), 1 << 10);
        fx.canonicalize();
        fy.canonicalize();
        return Point(min_x + fx * (max_x - min_x), min_y + fy * (max_y - min_y));
    }
    std::optional<Point> interior_point(int attempts = 64) {
        for (int i = 0; i < attempts; ++i) {
            Point p = bbox_point();
            if (locate_point(P, p).kind == Location::Kind::Interior) return p;
        }
        return std::nullopt;
    }
};

bool edge_on_boundary(const Polygon& P, const Point& u, const Point& v) {
    for (size_t i = 0; i < P.size(); ++i) {
        auto [a, b] = P.edge(i);
        if (on_segment(a, b, u) && on_segment(a, b, v)) return true;
    }
    return false;
}

std::string seg_witness(const Point& a, const Point& b) {
    return format_point(a) + "-" + format_point(b);
}

}  // namespace

std::optional<CheckFailure> run_property_checks(const Polygon& P, const CheckOptions& opt) {
    size_t n = P.size();
    Triangulation T = Triangulation::build(P);
    Sampler smp(P, opt.seed);

    DiameterResult D = diameter(P);
    CenterResult C = center(P);
    if (C.radius * 2 != D.value)
        return CheckFailure{"rad = diam/2", "radius " + format_scalar(C.radius) + " vs diameter " +
                                                format_scalar(D.value)};
    if (!C.is_point()) {
        Scalar dx = C.segment.second.x - C.segment.first.x;
        Scalar dy = C.segment.second.y - C.segment.first.y;
        if (abs(dx) != abs(dy))
            return CheckFailure{"center segment slope",
                                seg_witness(C.segment.first, C.segment.second)};
    }

    if (opt.with_oracle && n <= 128) {
        auto [pair, val] = oracle_diameter(P);
        if (val != D.value)
            return CheckFailure{"diameter = oracle", "fast " + format_scalar(D.value) +
                                                         " oracle " + format_scalar(val)};
        OracleReport rep = oracle_center_check(P, C, std::min<size_t>(opt.trials, 30), opt.seed);
        if (!rep.pass) return CheckFailure{"oracle_center_check", rep.detail};
    }

    // Geodesic ball structure, membership, P-convexity, monotonicity.
    std::vector<std::pair<Point, ShortestPathMap>> pool;
    pool.push_back({P.vertex(0), ShortestPathMap::build(T, P.vertex(0))});
    if (auto ip = smp.interior_point()) pool.push_back({*ip, ShortestPathMap::build(T, *ip)});
    pool.push_back({P.vertex(n / 2), ShortestPathMap::build(T, P.vertex(n / 2))});

    std::vector<Scalar> radii{D.value / 4, D.value / 2, 3 * D.value / 4};
    for (auto& [s, M] : pool) {
        GeodesicBall prev_ball{s, Scalar(-1), {}};
        for (const Scalar& r : radii) {
            GeodesicBall ball = geodesic_ball(M, r);
            if (ball.boundary.size() >= 3) {
                size_t m = ball.boundary.size();
                for (size_t i = 0; i < m; ++i) {
                    const Point& u = ball.boundary[i];
                    const Point& v = ball.boundary[(i + 1) % m];
                    if (abs(v.x - u.x) != abs(v.y - u.y) && !edge_on_boundary(P, u, v))
                        return CheckFailure{"ball edge slope", seg_witness(u, v)};
                }
                // Membership: boundary vertices plus random points.
                std::vector<Point> xs = ball.boundary;
                for (size_t k = 0; k < opt.trials / 4; ++k) {
                    Point x = smp.bbox_point();
                    if (locate_point(P, x).inside()) xs.push_back(x);
                }
                for (const Point& x : xs) {
                    Scalar d = geodesic_distance(T, s, x);
                    bool contains = opt.mutate ? d < r : d <= r;
                    bool in_ring = locate_in_ring(ball.boundary, x).inside();
                    if (contains != in_ring)
                        return CheckFailure{"ball membership", format_point(x) + " d=" +
                                                                   format_scalar(d) + " r=" +
                                                                   format_scalar(r)};
                }
                if (auto w = pconvexity_witness(T, ball, opt.trials, smp.rng()))
                    return CheckFailure{"ball P-convexity", seg_witness(w->first, w->second)};
                // Monotonicity against the previous smaller radius.
                if (prev_ball.boundary.size() >= 3) {
                    for (const Point& x : prev_ball.boundary)
                        if (!locate_in_ring(ball.boundary, x).inside())
                            return CheckFailure{"ball monotonicity", format_point(x)};
                }
            }
            prev_ball = ball;
        }
    }

    // Helly number two over random triples from the pool.
    for (size_t t = 0; t < std::max<size_t>(opt.trials / 4, 8); ++t) {
        Scalar r = D.value * long(1 + smp.rng() % 8) / 8;
        const auto& b1 = pool[smp.rng() % pool.size()];
        const auto& b2 = pool[smp.rng() % pool.size()];
        const auto& b3 = pool[smp.rng() % pool.size()];
        if (!balls_intersect(T, b1.first, b2.first, r) ||
            !balls_intersect(T, b1.first, b3.first, r) ||
            !balls_intersect(T, b2.first, b3.first, r))
            continue;
        auto common = triple_common_point(T, geodesic_ball(b1.second, r),
                                          geodesic_ball(b2.second, r), geodesic_ball(b3.second, r));
        if (!common)
            return CheckFailure{"Helly number two", "r=" + format_scalar(r) + " sources " +
                                                        format_point(b1.first) + " " +
                                                        format_point(b2.first) + " " +
                                                        format_point(b3.first)};
        for (const auto* bp : {&b1, &b2, &b3})
            if (geodesic_distance(T, bp->first, *common) > r)
                return CheckFailure{"Helly witness", format_point(*common)};
    }

    // Convexity of d(s,.) along axis-parallel segments, quasiconvexity on
    // arbitrary ones.
    for (size_t t = 0; t < opt.trials; ++t) {
        auto& [s, M] = pool[t % pool.size()];
        Point p = smp.bbox_point(), q = smp.bbox_point();
        if (t % 2 == 0) q = (smp.rng() % 2) ? Point(p.x, q.y) : Point(q.x, p.y);
        if (p == q || !locate_point(P, p).inside() || !locate_point(P, q).inside()) continue;
        if (!segment_in_polygon(P, p, q)) continue;
        Point mid((p.x + q.x) / 2, (p.y + q.y) / 2);
        Scalar dp = M.query(p), dq = M.query(q), dm = M.query(mid);
        if (t % 2 == 0 && 2 * dm > dp + dq)
            return CheckFailure{"axis-parallel midpoint convexity", seg_witness(p, q)};
        Scalar cap = std::max(dp, dq);
        for (int k = 1; k < 8; ++k) {
            Point x(p.x + (q.x - p.x) * k / 8, p.y + (q.y - p.y) * k / 8);
            if (M.query(x) > cap)
                return CheckFailure{"quasiconvexity", seg_witness(p, q) + " at " + format_point(x)};
        }
    }

    // SMAWK contract on a random chain decomposition.
    if (n >= 4) {
        size_t a = 2 + smp.rng() % (n - 2);
        size_t b = a + 1 + smp.rng() % (n - a);
        for (const ChainPair& cp : decompose_chains(n, a, b)) {
            if (cp.U.empty()) continue;
            size_t evals = 0;
            auto fast = restricted_farthest_neighbors(T, cp, &evals);
            if (evals > 8 * (cp.U.size() + cp.W.size()))
                return CheckFailure{"smawk eval bound", std::to_string(evals) + " evals for " +
                                                            std::to_string(cp.U.size()) + "x" +
                                                            std::to_string(cp.W.size())};
            for (size_t i = 0; i < cp.U.size(); ++i) {
                Scalar best = 0;
                for (size_t w : cp.W)
                    best = std::max(best,
                                    geodesic_distance(T, P.vertex(cp.U[i]), P.vertex(w)));
                if (fast[i].second != best)
                    return CheckFailure{"smawk = naive scan",
                                        "u=" + std::to_string(cp.U[i]) + " fast " +
                                            format_scalar(fast[i].second) + " naive " +
                                            format_scalar(best)};
            }
            if (opt.with_oracle && n <= 128) {
                if (auto v = check_totally_monotone(P, cp, opt.trials, opt.seed))
                    return CheckFailure{"quadrangle inequality",
                                        "i,j,k,l = " + std::to_string(v->i) + "," +
                                            std::to_string(v->j) + "," + std::to_string(v->k) +
                                            "," + std::to_string(v->l)};
            }
        }
    }

    // Interval formula against the chord profile on the center chord.
    auto cc = center_chord(T, D.pair.first, D.pair.second, C.radius);
    if (std::holds_alternative<Chord>(cc)) {
        const Chord& c = std::get<Chord>(cc);
        size_t step = std::max<size_t>(1, n / 12);
        for (size_t v = 0; v < n; v += step) {
            ShortestPathMap Mv = ShortestPathMap::build(T, P.vertex(v));
            ChordProfile prof = chord_profile(Mv, c.a, c.b);
            auto sub = prof.sublevel(C.radius);
            ChordInterval iv = vertex_interval(geodesic_distance(T, P.vertex(v), c.a),
                                               geodesic_distance(T, P.vertex(v), c.b), C.radius,
                                               c.length);
            if (iv.empty() != !sub.has_value())
                return CheckFailure{"vertex_interval emptiness", "v=" + std::to_string(v)};
            if (sub && (sub->first != iv.lo || sub->second != iv.hi))
                return CheckFailure{"vertex_interval = profile sublevel",
                                    "v=" + std::to_string(v) + " profile [" +
                                        format_scalar(sub->first) + "," +
                                        format_scalar(sub->second) + "] formula [" +
                                        format_scalar(iv.lo) + "," + format_scalar(iv.hi) + "]"};
        }
    }

    return std::nullopt;
}

}  // namespace l1geo
