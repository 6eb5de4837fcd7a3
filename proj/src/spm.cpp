#include <algorithm>
#include <map>
#include <set>

#include "l1geo/geodesic.hpp"

namespace l1geo {

namespace {

constexpr long SRC = -1;

struct Subdivision {
    std::vector<Point> nodes;
    // Undirected edges as node pairs plus the cut vertex they came from
    // (nullopt for polygon boundary pieces).
    std::vector<std::pair<std::pair<size_t, size_t>, std::optional<size_t>>> edges;

    std::map<Point, size_t, bool (*)(const Point&, const Point&)> index{point_less};

    size_t node(const Point& p) {
        auto [it, fresh] = index.try_emplace(p, nodes.size());
        if (fresh) nodes.push_back(p);
        return it->second;
    }
    void edge(size_t u, size_t v, std::optional<size_t> cut) {
        if (u == v) return;
        edges.push_back({{std::min(u, v), std::max(u, v)}, cut});
    }
};

struct Face {
    std::vector<size_t> ring;  // node ids, CCW for interior faces
    Scalar area2;
};

}  // namespace

ShortestPathMap ShortestPathMap::build(const Triangulation& T, const Point& source) {
    const Polygon& P = T.polygon();
    size_t n = P.size();
    ShortestPathMap M;
    M.tri_ = &T;
    M.src_ = source;
    M.tree_ = ShortestPathTree::build(T, source);

    // Extend each tree edge past its endpoint; pass straight through grazed
    // vertices, stop at the boundary.  Pieces running along the boundary or
    // leaving P immediately are dropped.
    struct CutPiece {
        size_t v;  // owning tree vertex
        Point a, b;
    };
    std::vector<CutPiece> cuts;
    for (size_t v = 0; v < n; ++v) {
        Point pv = P.vertex(v);
        auto par = M.tree_.parent(v);
        Point pu = par ? P.vertex(*par) : source;
        if (pu == pv) continue;
        Point dir(pv.x - pu.x, pv.y - pu.y);
        Point cur = pv;
        while (true) {
            Point hit = ray_shoot(P, cur, dir);
            if (hit == cur) break;
            Point mid((cur.x + hit.x) / 2, (cur.y + hit.y) / 2);
            if (locate_point(P, mid).kind != Location::Kind::Interior) break;
            cuts.push_back({v, cur, hit});
            Location loc = locate_point(P, hit);
            if (hit != P.vertex(loc.edge)) break;  // landed inside an edge
            cur = hit;
        }
    }

    // Planar subdivision: boundary edges split at cut endpoints, plus cuts.
    Subdivision S;
    std::vector<size_t> vert_node(n);
    for (size_t i = 0; i < n; ++i) vert_node[i] = S.node(P.vertex(i));
    std::vector<std::vector<Point>> on_edge(n);
    for (const CutPiece& c : cuts) {
        S.node(c.a);
        size_t nb = S.node(c.b);
        Location loc = locate_point(P, c.b);
        if (loc.kind == Location::Kind::Boundary && S.nodes[nb] != P.vertex(loc.edge))
            on_edge[loc.edge].push_back(c.b);
    }
    for (size_t i = 0; i < n; ++i) {
        auto [a, b] = P.edge(i);
        auto& pts = on_edge[i];
        std::sort(pts.begin(), pts.end(), [&](const Point& p, const Point& q) {
            return l1_distance(a, p) < l1_distance(a, q);
        });
        size_t prev = vert_node[i];
        for (const Point& p : pts) {
            size_t cur = S.node(p);
            S.edge(prev, cur, std::nullopt);
            prev = cur;
        }
        S.edge(prev, vert_node[(i + 1) % n], std::nullopt);
    }
    for (const CutPiece& c : cuts) S.edge(S.node(c.a), S.node(c.b), c.v);

    // Drop duplicate undirected edges (collinear overlapping cuts).
    {
        std::map<std::pair<size_t, size_t>, size_t> seen;
        std::vector<std::pair<std::pair<size_t, size_t>, std::optional<size_t>>> uniq;
        for (auto& e : S.edges)
            if (seen.emplace(e.first, uniq.size()).second) uniq.push_back(e);
        S.edges = std::move(uniq);
    }

    // Face walk: outgoing edges sorted CCW around each node; the successor of
    // a half edge is the clockwise neighbor of its reversal at the head.
    size_t nn = S.nodes.size();
    std::vector<std::vector<std::pair<size_t, size_t>>> out(nn);  // (to, edge id)
    for (size_t e = 0; e < S.edges.size(); ++e) {
        auto [u, v] = S.edges[e].first;
        out[u].push_back({v, e});
        out[v].push_back({u, e});
    }
    for (size_t u = 0; u < nn; ++u) {
        std::sort(out[u].begin(), out[u].end(), [&](const auto& x, const auto& y) {
            Point dx(S.nodes[x.first].x - S.nodes[u].x, S.nodes[x.first].y - S.nodes[u].y);
            Point dy(S.nodes[y.first].x - S.nodes[u].x, S.nodes[y.first].y - S.nodes[u].y);
            return direction_ccw_less(dx, dy);
        });
    }
    auto slot_of = [&](size_t u, size_t to, size_t e) {
        for (size_t s = 0; s < out[u].size(); ++s)
            if (out[u][s] == std::make_pair(to, e)) return s;
        throw GeometryError("spm: inconsistent adjacency");
    };

    // Half edge id: 2*e for u->v (u < v), 2*e+1 for v->u.
    auto half_id = [&](size_t from, size_t e) {
        return 2 * e + (from == S.edges[e].first.first ? 0 : 1);
    };
    std::vector<long> face_of(2 * S.edges.size(), -1);
    std::vector<Face> faces;
    for (size_t e = 0; e < S.edges.size(); ++e) {
        for (size_t d = 0; d < 2; ++d) {
            size_t h0 = 2 * e + d;
            if (face_of[h0] != -1) continue;
            size_t from = d == 0 ? S.edges[e].first.first : S.edges[e].first.second;
            size_t to = d == 0 ? S.edges[e].first.second : S.edges[e].first.first;
            size_t cur_e = e;
            Face face;
            while (true) {
                size_t h = half_id(from, cur_e);
                if (face_of[h] != -1) break;
                face_of[h] = long(faces.size());
                face.ring.push_back(from);
                size_t slot = slot_of(to, from, cur_e);
                size_t deg = out[to].size();
                auto [nxt_to, nxt_e] = out[to][(slot + deg - 1) % deg];
                from = to;
                to = nxt_to;
                cur_e = nxt_e;
            }
            if (!face.ring.empty()) {
                std::vector<Point> ring;
                for (size_t id : face.ring) ring.push_back(S.nodes[id]);
                face.area2 = ring_area2(ring);
                faces.push_back(std::move(face));
            }
        }
    }

    std::vector<long> cell_of_face(faces.size(), -1);
    Scalar covered = 0;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (faces[f].area2 > 0) {
            cell_of_face[f] = long(M.cells_.size());
            SpmCell cell;
            for (size_t id : faces[f].ring) cell.ring.push_back(S.nodes[id]);
            M.cells_.push_back(std::move(cell));
            covered += faces[f].area2;
        }
    }
    if (covered != P.signed_area2()) throw GeometryError("spm: faces do not cover polygon");

    // Apex per cell: the source's cell has the source as apex; crossing the
    // cut of tree vertex v swaps apex between v and parent(v).
    std::vector<long> apex(M.cells_.size(), -2);
    long root = -1;
    for (size_t c = 0; c < M.cells_.size() && root == -1; ++c)
        if (locate_in_ring(M.cells_[c].ring, source).inside()) root = long(c);
    if (root == -1) throw GeometryError("spm: source not in any cell");
    apex[size_t(root)] = SRC;

    auto fallback_apex = [&](size_t c) {
        Point rep = interior_point_of_ring(M.cells_[c].ring);
        std::optional<long> best;
        Scalar best_val = 0;
        auto consider = [&](long node, const Point& pt, const Scalar& base) {
            Scalar val = base + l1_distance(pt, rep);
            if (best && val >= best_val) return;
            if (!segment_in_polygon(P, pt, rep)) return;
            for (const CutPiece& cp : cuts)
                if (segments_cross_properly(pt, rep, cp.a, cp.b)) return;
            best = node;
            best_val = val;
        };
        consider(SRC, source, Scalar(0));
        for (size_t v = 0; v < n; ++v) consider(long(v), P.vertex(v), M.tree_.distance(v));
        if (!best) throw GeometryError("spm: no apex candidate for cell");
        return *best;
    };

    std::vector<std::vector<std::pair<size_t, size_t>>> cell_adj(M.cells_.size());
    for (size_t e = 0; e < S.edges.size(); ++e) {
        if (!S.edges[e].second) continue;
        long f0 = face_of[2 * e], f1 = face_of[2 * e + 1];
        if (f0 < 0 || f1 < 0) continue;
        long c0 = cell_of_face[size_t(f0)], c1 = cell_of_face[size_t(f1)];
        if (c0 < 0 || c1 < 0 || c0 == c1) continue;
        cell_adj[size_t(c0)].push_back({size_t(c1), *S.edges[e].second});
        cell_adj[size_t(c1)].push_back({size_t(c0), *S.edges[e].second});
    }
    std::vector<size_t> queue{size_t(root)};
    while (!queue.empty()) {
        size_t c = queue.back();
        queue.pop_back();
        for (auto [other, v] : cell_adj[c]) {
            if (apex[other] != -2) continue;
            auto par = M.tree_.parent(v);
            long u = par ? long(*par) : SRC;
            if (apex[c] == u)
                apex[other] = long(v);
            else if (apex[c] == long(v))
                apex[other] = u;
            else
                apex[other] = fallback_apex(other);
            queue.push_back(other);
        }
    }
    for (size_t c = 0; c < M.cells_.size(); ++c) {
        if (apex[c] == -2) apex[c] = fallback_apex(c);
        SpmCell& cell = M.cells_[c];
        if (apex[c] == SRC) {
            cell.apex = std::nullopt;
            cell.apex_point = source;
            cell.additive = 0;
        } else {
            cell.apex = size_t(apex[c]);
            cell.apex_point = P.vertex(size_t(apex[c]));
            cell.additive = M.tree_.distance(size_t(apex[c]));
        }
    }
    return M;
}

size_t ShortestPathMap::cell_containing(const Point& x) const {
    for (size_t c = 0; c < cells_.size(); ++c)
        if (locate_in_ring(cells_[c].ring, x).inside()) return c;
    throw PointOutsidePolygon();
}

Scalar ShortestPathMap::query(const Point& x) const {
    const SpmCell& cell = cells_[cell_containing(x)];
    return cell.additive + l1_distance(cell.apex_point, x);
}

Scalar ChordProfile::value_at(const Scalar& t) const {
    if (t < breaks.front().first || t > breaks.back().first)
        throw GeometryError("chord profile: parameter out of range");
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto& [t0, v0] = breaks[i];
        const auto& [t1, v1] = breaks[i + 1];
        if (t <= t1) return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
    }
    return breaks.back().second;
}

std::optional<std::pair<Scalar, Scalar>> ChordProfile::sublevel(const Scalar& r) const {
    std::optional<Scalar> lo, hi;
    for (size_t i = 0; i < breaks.size(); ++i) {
        const auto& [t, v] = breaks[i];
        if (v <= r) {
            if (!lo) {
                lo = t;
                if (i > 0 && breaks[i - 1].second > r) {
                    const auto& [tp, vp] = breaks[i - 1];
                    *lo = tp + (vp - r) * (t - tp) / (vp - v);
                }
            }
            hi = t;
            if (i + 1 < breaks.size() && breaks[i + 1].second > r) {
                const auto& [tn, vn] = breaks[i + 1];
                *hi = t + (r - v) * (tn - t) / (vn - v);
            }
        }
    }
    if (!lo) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

ChordProfile chord_profile(const ShortestPathMap& M, const Point& a, const Point& b) {
    const Polygon& P = M.triangulation().polygon();
    Scalar dx = b.x - a.x, dy = b.y - a.y;
    if (a == b) throw ChordError("chord endpoints coincide");
    if (dx != 0 && dy != 0 && abs(dx) != abs(dy))
        throw ChordError("chord must be axis-parallel or of slope +-1");
    if (!segment_in_polygon(P, a, b)) throw ChordError("chord not inside polygon");

    Scalar L = l1_distance(a, b);
    auto point_at = [&](const Scalar& t) { return Point(a.x + dx * t / L, a.y + dy * t / L); };

    std::vector<Scalar> ts{Scalar(0), L};
    auto add = [&](const Scalar& t) {
        if (t > 0 && t < L) ts.push_back(t);
    };
    for (const SpmCell& cell : M.cells()) {
        size_t m = cell.ring.size();
        for (size_t i = 0; i < m; ++i) {
            const Point& c = cell.ring[i];
            const Point& d = cell.ring[(i + 1) % m];
            if (!segments_intersect(a, b, c, d)) continue;
            Scalar sx = d.x - c.x, sy = d.y - c.y;
            Scalar denom = dx * sy - dy * sx;
            if (denom != 0) {
                Scalar t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
                add(t * L);
            } else {
                for (const Point* p : {&c, &d})
                    if (on_segment(a, b, *p)) add(l1_distance(a, *p));
            }
        }
        // Distance to the apex kinks where the chord crosses its axis lines.
        if (dx != 0) add((cell.apex_point.x - a.x) * L / dx);
        if (dy != 0) add((cell.apex_point.y - a.y) * L / dy);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    ChordProfile prof{a, b, L, {}};
    for (const Scalar& t : ts) prof.breaks.push_back({t, M.query(point_at(t))});

    // Merge runs of equal slope; every piece must have slope -1, 0 or +1.
    std::vector<std::pair<Scalar, Scalar>> merged{prof.breaks.front()};
    std::optional<Scalar> prev_slope;
    for (size_t i = 1; i < prof.breaks.size(); ++i) {
        const auto& [t1, v1] = prof.breaks[i];
        const auto& [t0, v0] = merged.back();
        Scalar slope = (v1 - v0) / (t1 - t0);
        if (slope != -1 && slope != 0 && slope != 1)
            throw GeometryError("chord profile: unexpected slope " + format_scalar(slope));
        if (prev_slope && slope == *prev_slope)
            merged.back() = prof.breaks[i];
        else
            merged.push_back(prof.breaks[i]);
        prev_slope = slope;
    }
    prof.breaks = std::move(merged);
    return prof;
}

}  // namespace l1geo
