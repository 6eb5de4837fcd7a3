#include "l1geo/balls.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace l1geo {

namespace {

// Sutherland-Hodgman clip of a CCW ring against the half plane g(p) >= 0.
std::vector<Point> clip_halfplane(const std::vector<Point>& ring,
                                  const std::function<Scalar(const Point&)>& g) {
    std::vector<Point> out;
    size_t m = ring.size();
    for (size_t i = 0; i < m; ++i) {
        const Point& s = ring[i];
        const Point& e = ring[(i + 1) % m];
        Scalar gs = g(s), ge = g(e);
        auto cut = [&]() {
            Scalar t = gs / (gs - ge);
            return Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y));
        };
        if (gs >= 0) {
            out.push_back(s);
            if (ge < 0) out.push_back(cut());
        } else if (ge >= 0) {
            out.push_back(cut());
        }
    }
    // Deduplicate consecutive equal vertices.
    std::vector<Point> ded;
    for (const Point& p : out)
        if (ded.empty() || ded.back() != p) ded.push_back(p);
    while (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
    return ded;
}

// Clip a cell ring to the L1 disk of radius rr about the apex.
std::vector<Point> clip_to_diamond(const std::vector<Point>& ring, const Point& apex,
                                   const Scalar& rr) {
    std::vector<Point> cur = ring;
    for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
            auto g = [&, sx, sy](const Point& p) -> Scalar {
                return rr - sx * (p.x - apex.x) - sy * (p.y - apex.y);
            };
            cur = clip_halfplane(cur, g);
            if (cur.size() < 3) return {};
        }
    }
    return cur;
}

std::vector<Point> collapse_ring(std::vector<Point> ring) {
    // Remove collinear interior vertices, treating the ring cyclically.
    bool changed = true;
    while (changed && ring.size() > 2) {
        changed = false;
        std::vector<Point> next;
        size_t m = ring.size();
        for (size_t i = 0; i < m; ++i) {
            const Point& a = ring[(i + m - 1) % m];
            const Point& b = ring[i];
            const Point& c = ring[(i + 1) % m];
            if (b == a || (orientation_sign(a, b, c) == 0 && on_segment(a, c, b))) {
                changed = true;
                continue;
            }
            next.push_back(b);
        }
        ring = std::move(next);
    }
    return ring;
}

// Among candidate outgoing directions at a pinch node, the one reached first
// when rotating clockwise from the reversed incoming direction.
size_t pick_cw_successor(const Point& rev, const std::vector<Point>& dirs) {
    // Larger CCW angle from rev (in (0, 2pi]) means found earlier clockwise.
    auto cls = [&](const Point& d) {
        Scalar cr = rev.x * d.y - rev.y * d.x;
        Scalar dt = rev.x * d.x + rev.y * d.y;
        if (cr == 0) return dt > 0 ? 0 : 2;  // 0 = parallel same dir, 2 = opposite
        return cr > 0 ? 1 : 3;  // 1 = (0,pi), 3 = (pi,2pi)
    };
    size_t best = 0;
    for (size_t i = 1; i < dirs.size(); ++i) {
        int ci = cls(dirs[i]), cb = cls(dirs[best]);
        if (ci != cb) {
            if (ci > cb) best = i;
        } else if (dirs[best].x * dirs[i].y - dirs[best].y * dirs[i].x > 0) {
            best = i;  // same open half-turn: larger angle wins
        }
    }
    return best;
}

}  // namespace

GeodesicBall geodesic_ball(const ShortestPathMap& M, const Scalar& r) {
    GeodesicBall ball{M.source(), r, {}};
    if (r < 0) return ball;
    if (r == 0) {
        ball.boundary = {M.source()};
        return ball;
    }

    std::vector<std::vector<Point>> pieces;
    for (const SpmCell& cell : M.cells()) {
        Scalar rr = r - cell.additive;
        if (rr < 0) continue;
        std::vector<Point> piece = clip_to_diamond(cell.ring, cell.apex_point, rr);
        if (piece.size() >= 3 && ring_area2(piece) > 0) pieces.push_back(std::move(piece));
    }
    if (pieces.empty()) {
        // Radius smaller than every cell allows; the ball is s plus possibly
        // a degenerate neighborhood — report the single point.
        ball.boundary = {M.source()};
        return ball;
    }

    // Shared edges of adjacent pieces appear in both directions; split every
    // edge at intervening piece vertices, then cancel the opposite pairs.
    std::map<Point, size_t, bool (*)(const Point&, const Point&)> index(point_less);
    std::vector<Point> nodes;
    auto node = [&](const Point& p) {
        auto [it, fresh] = index.try_emplace(p, nodes.size());
        if (fresh) nodes.push_back(p);
        return it->second;
    };
    for (const auto& piece : pieces)
        for (const Point& p : piece) node(p);

    std::map<std::pair<size_t, size_t>, size_t> count;
    auto add_edge = [&](size_t u, size_t v) {
        if (u == v) return;
        auto rev = count.find({v, u});
        if (rev != count.end() && rev->second > 0)
            --rev->second;
        else
            ++count[{u, v}];
    };
    for (const auto& piece : pieces) {
        size_t m = piece.size();
        for (size_t i = 0; i < m; ++i) {
            const Point& a = piece[i];
            const Point& b = piece[(i + 1) % m];
            std::vector<size_t> mids;
            for (size_t id = 0; id < nodes.size(); ++id)
                if (nodes[id] != a && nodes[id] != b && on_segment(a, b, nodes[id]))
                    mids.push_back(id);
            std::sort(mids.begin(), mids.end(), [&](size_t x, size_t y) {
                return l1_distance(a, nodes[x]) < l1_distance(a, nodes[y]);
            });
            size_t prev = node(a);
            for (size_t id : mids) {
                add_edge(prev, id);
                prev = id;
            }
            add_edge(prev, node(b));
        }
    }

    std::vector<std::vector<size_t>> out(nodes.size());
    size_t total = 0;
    for (const auto& [key, c] : count) {
        for (size_t k = 0; k < c; ++k) {
            out[key.first].push_back(key.second);
            ++total;
        }
    }
    if (total == 0) throw GeometryError("geodesic_ball: no boundary edges after stitching");

    // Trace the boundary cycle, keeping the interior on the left at pinches.
    size_t start = size_t(-1);
    for (size_t u = 0; u < nodes.size(); ++u)
        if (!out[u].empty() && (start == size_t(-1) || point_less(nodes[u], nodes[start])))
            start = u;
    std::vector<Point> ring;
    size_t cur = start;
    size_t prev_node = size_t(-1);
    size_t used = 0;
    while (true) {
        size_t nxt;
        if (out[cur].size() == 1 || prev_node == size_t(-1)) {
            nxt = out[cur].back();
            out[cur].pop_back();
        } else {
            Point rev(nodes[prev_node].x - nodes[cur].x, nodes[prev_node].y - nodes[cur].y);
            std::vector<Point> dirs;
            for (size_t v : out[cur])
                dirs.push_back(Point(nodes[v].x - nodes[cur].x, nodes[v].y - nodes[cur].y));
            size_t pick = pick_cw_successor(rev, dirs);
            nxt = out[cur][pick];
            out[cur].erase(out[cur].begin() + long(pick));
        }
        ++used;
        ring.push_back(nodes[cur]);
        prev_node = cur;
        cur = nxt;
        if (cur == start && out[cur].empty()) break;
        if (used > total) throw GeometryError("geodesic_ball: boundary trace did not close");
    }
    if (used != total) throw GeometryError("geodesic_ball: boundary is not a single cycle");

    ball.boundary = collapse_ring(std::move(ring));
    return ball;
}

bool ball_contains(const Triangulation& T, const Point& s, const Scalar& r, const Point& x) {
    return geodesic_distance(T, s, x) <= r;
}

bool balls_intersect(const Triangulation& T, const Point& p, const Point& q, const Scalar& r) {
    return geodesic_distance(T, p, q) <= 2 * r;
}

std::optional<Point> triple_common_point(const Triangulation& T, const GeodesicBall& b1,
                                         const GeodesicBall& b2, const GeodesicBall& b3) {
    const GeodesicBall* balls[3] = {&b1, &b2, &b3};
    for (const GeodesicBall* b : balls)
        if (b->empty()) return std::nullopt;

    auto in_all = [&](const Point& c) {
        for (const GeodesicBall* b : balls)
            if (geodesic_distance(T, b->source, c) > b->radius) return false;
        return true;
    };

    std::vector<Point> cands;
    for (const GeodesicBall* b : balls) {
        cands.push_back(b->source);
        for (const Point& p : b->boundary) cands.push_back(p);
    }
    std::sort(cands.begin(), cands.end(), point_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Point& c : cands)
        if (in_all(c)) return c;

    // Pairwise boundary-edge intersections.
    std::vector<Point> xs;
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
            const auto& ri = balls[i]->boundary;
            const auto& rj = balls[j]->boundary;
            if (ri.size() < 2 || rj.size() < 2) continue;
            for (size_t ei = 0; ei < ri.size(); ++ei) {
                const Point& a = ri[ei];
                const Point& b = ri[(ei + 1) % ri.size()];
                for (size_t ej = 0; ej < rj.size(); ++ej) {
                    const Point& c = rj[ej];
                    const Point& d = rj[(ej + 1) % rj.size()];
                    if (!segments_intersect(a, b, c, d)) continue;
                    Scalar rx = b.x - a.x, ry = b.y - a.y;
                    Scalar sx = d.x - c.x, sy = d.y - c.y;
                    Scalar denom = rx * sy - ry * sx;
                    if (denom != 0) {
                        Scalar t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
                        if (t >= 0 && t <= 1) xs.push_back(Point(a.x + t * rx, a.y + t * ry));
                    } else {
                        for (const Point* p : {&c, &d})
                            if (on_segment(a, b, *p)) xs.push_back(*p);
                    }
                }
            }
        }
    }
    std::sort(xs.begin(), xs.end(), point_less);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const Point& c : xs)
        if (in_all(c)) return c;
    return std::nullopt;
}

std::optional<std::pair<Point, Point>> pconvexity_witness(const Triangulation& T,
                                                          const GeodesicBall& ball, size_t trials,
                                                          uint64_t seed) {
    if (ball.boundary.size() < 3) return std::nullopt;
    const Polygon& P = T.polygon();
    Scalar min_x = P.vertex(0).x, max_x = min_x, min_y = P.vertex(0).y, max_y = min_y;
    for (const Point& p : P.vertices()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> grid(0, 1 << 10);
    auto random_point = [&]() {
        Scalar fx(grid(rng), 1 << 10), fy(grid(rng), 1 << 10);
        fx.canonicalize();
        fy.canonicalize();
        return Point(min_x + fx * (max_x - min_x), min_y + fy * (max_y - min_y));
    };

    const auto& ring = ball.boundary;
    for (size_t t = 0; t < trials; ++t) {
        Point p, q;
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            p = random_point();
            q = random_point();
            ok = p != q && locate_point(P, p).inside() && locate_point(P, q).inside() &&
                 segment_in_polygon(P, p, q);
        }
        if (!ok) continue;

        // Split [p,q] at ring crossings and classify each open piece.
        std::vector<Scalar> ts{Scalar(0), Scalar(1)};
        Scalar rx = q.x - p.x, ry = q.y - p.y;
        for (size_t i = 0; i < ring.size(); ++i) {
            const Point& c = ring[i];
            const Point& d = ring[(i + 1) % ring.size()];
            if (!segments_intersect(p, q, c, d)) continue;
            Scalar sx = d.x - c.x, sy = d.y - c.y;
            Scalar denom = rx * sy - ry * sx;
            if (denom != 0) {
                Scalar tt = ((c.x - p.x) * sy - (c.y - p.y) * sx) / denom;
                if (tt >= 0 && tt <= 1) ts.push_back(tt);
            } else {
                for (const Point* e : {&c, &d})
                    if (on_segment(p, q, *e))
                        ts.push_back(rx != 0 ? (e->x - p.x) / rx : (e->y - p.y) / ry);
            }
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        int components = 0;
        bool prev_in = false;
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            Scalar tm = (ts[i] + ts[i + 1]) / 2;
            Point m(p.x + tm * rx, p.y + tm * ry);
            bool in = locate_in_ring(ring, m).inside();
            if (in && !prev_in) ++components;
            prev_in = in;
        }
        if (components >= 2) return std::make_pair(p, q);
    }
    return std::nullopt;
}

}  // namespace l1geo
