#include "l1geo/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

namespace l1geo {

namespace {

// Shortest paths over the visibility graph of `pts` inside P, exact weights.
struct VisGraph {
    std::vector<Point> pts;
    std::vector<std::vector<std::pair<size_t, Scalar>>> adj;

    VisGraph(const Polygon& P, std::vector<Point> points) : pts(std::move(points)) {
        size_t m = pts.size();
        adj.assign(m, {});
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                if (!segment_in_polygon(P, pts[i], pts[j])) continue;
                Scalar w = l1_distance(pts[i], pts[j]);
                adj[i].push_back({j, w});
                adj[j].push_back({i, w});
            }
        }
    }

    std::vector<Scalar> dijkstra(size_t src) const {
        std::vector<Scalar> dist(pts.size());
        std::vector<bool> done(pts.size(), false), seen(pts.size(), false);
        using Item = std::pair<Scalar, size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[src] = 0;
        seen[src] = true;
        pq.push({Scalar(0), src});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (done[u]) continue;
            done[u] = true;
            for (const auto& [v, w] : adj[u]) {
                Scalar nd = d + w;
                if (!seen[v] || nd < dist[v]) {
                    seen[v] = true;
                    dist[v] = nd;
                    pq.push({nd, v});
                }
            }
        }
        for (size_t u = 0; u < pts.size(); ++u)
            if (!done[u]) throw GeometryError("oracle: visibility graph is disconnected");
        return dist;
    }
};

Point bbox_sample(const Polygon& P, std::mt19937_64& rng) {
    Scalar min_x = P.vertex(0).x, max_x = min_x, min_y = P.vertex(0).y, max_y = min_y;
    for (const Point& p : P.vertices()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::uniform_int_distribution<int> grid(0, 1 << 10);
    Scalar fx(grid(rng), 1 << 10), fy(grid(rng), 1 << 10);
    fx.canonicalize();
    fy.canonicalize();
    return Point(min_x + fx * (max_x - min_x), min_y + fy * (max_y - min_y));
}

}  // namespace

VertexOracle::VertexOracle(const Polygon& P) : P_(P) {
    VisGraph G(P_, P_.vertices());
    for (size_t v = 0; v < P_.size(); ++v) D_.push_back(G.dijkstra(v));
}

std::pair<std::pair<size_t, size_t>, Scalar> VertexOracle::diameter() const {
    size_t n = P_.size();
    std::pair<size_t, size_t> best{0, 0};
    Scalar val = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (D_[i][j] > val) {
                val = D_[i][j];
                best = {i, j};
            }
    return {best, val};
}

// ecc(x) = max over v of the best route through a vertex visible from x.
Scalar VertexOracle::eccentricity(const Point& x) const {
    size_t n = P_.size();
    std::vector<std::pair<size_t, Scalar>> vis;  // visible vertex, l1 leg
    for (size_t u = 0; u < n; ++u)
        if (segment_in_polygon(P_, x, P_.vertex(u))) vis.push_back({u, l1_distance(x, P_.vertex(u))});
    if (vis.empty()) throw GeometryError("oracle: point sees no vertex");
    Scalar worst = 0;
    for (size_t v = 0; v < n; ++v) {
        std::optional<Scalar> best;
        for (const auto& [u, leg] : vis) {
            Scalar cand = leg + D_[u][v];
            if (!best || cand < *best) best = cand;
        }
        worst = std::max(worst, *best);
    }
    return worst;
}

Scalar oracle_distance(const Polygon& P, const Point& p, const Point& q) {
    if (!locate_point(P, p).inside() || !locate_point(P, q).inside()) throw PointOutsidePolygon();
    if (p == q) return 0;
    std::vector<Point> pts = P.vertices();
    size_t ip = pts.size();
    pts.push_back(p);
    size_t iq = pts.size();
    pts.push_back(q);
    VisGraph G(P, std::move(pts));
    return G.dijkstra(ip)[iq];
}

std::pair<std::pair<size_t, size_t>, Scalar> oracle_diameter(const Polygon& P) {
    VisGraph G(P, P.vertices());
    size_t n = P.size();
    std::pair<size_t, size_t> best{0, 0};
    Scalar val = 0;
    for (size_t i = 0; i < n; ++i) {
        auto dist = G.dijkstra(i);
        for (size_t j = i + 1; j < n; ++j) {
            if (dist[j] > val) {
                val = dist[j];
                best = {i, j};
            }
        }
    }
    return {best, val};
}

Scalar oracle_eccentricity(const Polygon& P, const Point& x) {
    if (!locate_point(P, x).inside()) throw PointOutsidePolygon();
    std::vector<Point> pts = P.vertices();
    size_t ix = pts.size();
    pts.push_back(x);
    VisGraph G(P, std::move(pts));
    auto dist = G.dijkstra(ix);
    Scalar ecc = 0;
    for (size_t v = 0; v < P.size(); ++v) ecc = std::max(ecc, dist[v]);
    return ecc;
}

OracleReport VertexOracle::center_check(const CenterResult& result, size_t samples,
                                        uint64_t seed) const {
    auto fmt = [](const Point& p) {
        return "(" + format_scalar(p.x) + "," + format_scalar(p.y) + ")";
    };
    const Point& a = result.segment.first;
    const Point& b = result.segment.second;
    Point mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    for (const Point& c : {a, b, mid}) {
        Scalar ecc = eccentricity(c);
        if (ecc != result.radius)
            return {false, "eccentricity " + format_scalar(ecc) + " != radius at " + fmt(c)};
    }

    std::mt19937_64 rng(seed);
    for (size_t s = 0; s < samples; ++s) {
        Point x = bbox_sample(P_, rng);
        if (!locate_point(P_, x).inside()) continue;
        if (eccentricity(x) < result.radius)
            return {false, "eccentricity below radius at " + fmt(x)};
    }

    // Points just outside the segment must be strictly worse.
    std::vector<Point> probes;
    if (a != b) {
        Scalar L = l1_distance(a, b);
        Scalar eps = L / 1024;
        Scalar ux = (b.x - a.x) / L, uy = (b.y - a.y) / L;
        probes.push_back(Point(a.x - eps * ux, a.y - eps * uy));
        probes.push_back(Point(b.x + eps * ux, b.y + eps * uy));
    } else {
        Scalar eps = result.radius / 1024;
        for (int sx : {1, -1})
            for (int sy : {1, -1}) probes.push_back(Point(a.x + eps * sx, a.y + eps * sy));
    }
    for (const Point& c : probes) {
        if (!locate_point(P_, c).inside()) continue;
        if (eccentricity(c) <= result.radius)
            return {false, "point beyond the center segment is not worse: " + fmt(c)};
    }
    return {true, ""};
}

OracleReport oracle_center_check(const Polygon& P, const CenterResult& result, size_t samples,
                                 uint64_t seed) {
    return VertexOracle(P).center_check(result, samples, seed);
}

std::optional<TmViolation> check_totally_monotone(const Polygon& P, const ChainPair& pair,
                                                  size_t quadruples, uint64_t seed) {
    size_t p = pair.U.size(), m = pair.W.size();
    if (p < 2 || m < 2) return std::nullopt;
    VisGraph G(P, P.vertices());
    std::map<size_t, std::vector<Scalar>> from;
    auto d = [&](size_t u, size_t w) -> const Scalar& {
        auto it = from.find(u);
        if (it == from.end()) it = from.emplace(u, G.dijkstra(u)).first;
        return it->second[w];
    };
    std::mt19937_64 rng(seed);
    for (size_t t = 0; t < quadruples; ++t) {
        size_t i = rng() % p, j = rng() % p;
        size_t k = rng() % m, l = rng() % m;
        if (i > j) std::swap(i, j);
        if (k > l) std::swap(k, l);
        if (i == j || k == l) continue;
        size_t ui = pair.U[i], uj = pair.U[j], wk = pair.W[k], wl = pair.W[l];
        if (d(uj, wk) + d(ui, wl) > d(uj, wl) + d(ui, wk)) return TmViolation{i, j, k, l};
    }
    return std::nullopt;
}

}  // namespace l1geo
