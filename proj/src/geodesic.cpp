#include "l1geo/geodesic.hpp"

#include <algorithm>
#include <unordered_map>

namespace l1geo {

namespace {

constexpr long SRC = -1;

// Funnel over a directed diagonal chain.front() -> chain.back(); the region
// still to be processed lies to the left of that diagonal.  Walking from the
// apex toward chain.front() turns only left, toward chain.back() only right.
struct Funnel {
    std::vector<long> chain;  // node ids; interior may contain SRC only at seed
    size_t apex;
};

struct FunnelCtx {
    const std::vector<Point>& verts;
    Point src;
    // node -> (parent node, geodesic distance from src)
    std::unordered_map<long, std::pair<long, Scalar>> rec;

    explicit FunnelCtx(const std::vector<Point>& v, Point s) : verts(v), src(std::move(s)) {}

    const Point& pt(long id) const { return id == SRC ? src : verts[size_t(id)]; }
    Scalar dist_of(long id) const { return id == SRC ? Scalar(0) : rec.at(id).second; }
    void attach(long id, long parent) {
        rec[id] = {parent, dist_of(parent) + l1_distance(pt(parent), pt(id))};
    }
};

// Index of the chain vertex the shortest path to w leaves the funnel from.
// w must lie weakly left of the diagonal chain.front() -> chain.back().
size_t tangent_index(const FunnelCtx& C, const Funnel& F, const Point& w) {
    size_t k = F.chain.size() - 1;
    size_t j = F.apex;
    auto blocked = [&](const Point& a, const Point& b, int want) {
        int o = orientation_sign(a, b, w);
        if (o == want) return true;
        // Collinear: advance only when b lies between a and w.
        return o == 0 && on_segment(a, w, b) && !(b == a);
    };
    while (j < k && blocked(C.pt(F.chain[j]), C.pt(F.chain[j + 1]), -1)) ++j;
    if (j != F.apex) return j;
    while (j > 0 && blocked(C.pt(F.chain[j]), C.pt(F.chain[j - 1]), 1)) --j;
    return j;
}

// Attach vertex w (the triangle corner beyond the funnel's diagonal) and
// split the funnel into the two child funnels over (front..w) and (w..back).
std::pair<Funnel, Funnel> attach_and_split(FunnelCtx& C, const Funnel& F, long w) {
    size_t j = tangent_index(C, F, C.pt(w));
    C.attach(w, F.chain[j]);
    Funnel right;
    right.chain.reserve(F.chain.size() - j + 1);
    right.chain.push_back(w);
    right.chain.insert(right.chain.end(), F.chain.begin() + long(j), F.chain.end());
    right.apex = std::max(F.apex, j) - j + 1;
    Funnel left;
    left.chain.assign(F.chain.begin(), F.chain.begin() + long(j) + 1);
    left.chain.push_back(w);
    left.apex = std::min(F.apex, j);
    return {std::move(left), std::move(right)};
}

// Seed funnels out of the triangle containing the source: for the CCW edge
// tri[j] -> tri[j+1] the region across it lies left of tri[j+1] -> tri[j].
Funnel seed_funnel(const std::array<size_t, 3>& tri, size_t j) {
    return Funnel{{long(tri[(j + 1) % 3]), SRC, long(tri[j])}, 1};
}

size_t third_corner(const std::array<size_t, 3>& tri, long a, long b) {
    for (size_t c : tri)
        if (long(c) != a && long(c) != b) return c;
    throw GeometryError("degenerate triangle corners");
}

bool edge_matches(const std::array<size_t, 3>& tri, size_t j, long a, long b) {
    long u = long(tri[j]), w = long(tri[(j + 1) % 3]);
    return (u == a && w == b) || (u == b && w == a);
}

std::vector<Point> collapse_collinear(std::vector<Point> pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        if (!out.empty() && out.back() == p) continue;
        while (out.size() >= 2 && orientation_sign(out[out.size() - 2], out.back(), p) == 0 &&
               on_segment(out[out.size() - 2], p, out.back()))
            out.pop_back();
        out.push_back(p);
    }
    return out;
}

}  // namespace

namespace {

GeodesicPath sleeve_walk(const Triangulation& T, const Point& p, const Point& q, size_t tp,
                         size_t tq);

}  // namespace

GeodesicPath shortest_path(const Triangulation& T, const Point& p, const Point& q) {
    if (p == q) return {{p}, 0};
    return sleeve_walk(T, p, q, T.find_triangle(p), T.find_triangle(q));
}

GeodesicPath shortest_path(const Triangulation& T, size_t u, size_t w) {
    const Polygon& P = T.polygon();
    if (u == w) return {{P.vertex(u)}, 0};
    return sleeve_walk(T, P.vertex(u), P.vertex(w), T.vertex_triangle(u), T.vertex_triangle(w));
}

namespace {

GeodesicPath sleeve_walk(const Triangulation& T, const Point& p, const Point& q, size_t tp,
                         size_t tq) {
    if (tp == tq) return {{p, q}, l1_distance(p, q)};

    FunnelCtx ctx(T.polygon().vertices(), p);
    auto sl = T.sleeve(tp, tq);

    const Diagonal& d0 = *sl[1].entered_through;
    ctx.attach(long(d0.a), SRC);
    ctx.attach(long(d0.b), SRC);
    Funnel f;
    bool seeded = false;
    for (size_t j = 0; j < 3 && !seeded; ++j) {
        if (edge_matches(T.triangle(tp), j, long(d0.a), long(d0.b))) {
            f = seed_funnel(T.triangle(tp), j);
            seeded = true;
        }
    }
    if (!seeded) throw GeometryError("sleeve diagonal not on first triangle");

    for (size_t i = 1; i + 1 < sl.size(); ++i) {
        long a = f.chain.front(), b = f.chain.back();
        long w = long(third_corner(T.triangle(sl[i].tri), a, b));
        auto [left, right] = attach_and_split(ctx, f, w);
        const Diagonal& nd = *sl[i + 1].entered_through;
        Diagonal left_d{size_t(a), size_t(w)};
        f = (nd == left_d) ? std::move(left) : std::move(right);
    }

    size_t jq = tangent_index(ctx, f, q);
    long node = f.chain[jq];
    Scalar total = ctx.dist_of(node) + l1_distance(ctx.pt(node), q);

    std::vector<Point> rev{q};
    while (node != SRC) {
        rev.push_back(ctx.pt(node));
        node = ctx.rec.at(node).first;
    }
    rev.push_back(p);
    std::reverse(rev.begin(), rev.end());
    return {collapse_collinear(std::move(rev)), total};
}

}  // namespace

Scalar geodesic_distance(const Triangulation& T, const Point& p, const Point& q) {
    return shortest_path(T, p, q).length;
}

Scalar geodesic_distance(const Triangulation& T, size_t u, size_t w) {
    return shortest_path(T, u, w).length;
}

ShortestPathTree ShortestPathTree::build(const Triangulation& T, const Point& source) {
    const Polygon& P = T.polygon();
    size_t n = P.size();
    ShortestPathTree spt;
    spt.tri_ = &T;
    spt.src_ = source;
    spt.par_.assign(n, -2);
    spt.dist_.assign(n, Scalar(0));

    FunnelCtx ctx(P.vertices(), source);
    auto record = [&](size_t v) {
        if (spt.par_[v] != -2) throw GeometryError("spt: vertex attached twice");
        spt.par_[v] = ctx.rec.at(long(v)).first;
        spt.dist_[v] = ctx.rec.at(long(v)).second;
        spt.order_.push_back(v);
    };

    size_t t0 = T.find_triangle(source);
    for (size_t c : T.triangle(t0)) {
        ctx.attach(long(c), SRC);
        record(c);
    }

    struct Item {
        Funnel f;
        size_t tri;
    };
    std::vector<Item> stack;
    for (size_t j = 0; j < 3; ++j)
        if (auto nb = T.neighbor(t0, j)) stack.push_back({seed_funnel(T.triangle(t0), j), *nb});

    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        long a = it.f.chain.front(), b = it.f.chain.back();
        size_t w = third_corner(T.triangle(it.tri), a, b);
        auto [left, right] = attach_and_split(ctx, it.f, long(w));
        record(w);
        for (size_t j = 0; j < 3; ++j) {
            auto nb = T.neighbor(it.tri, j);
            if (!nb) continue;
            if (edge_matches(T.triangle(it.tri), j, a, long(w)))
                stack.push_back({left, *nb});
            else if (edge_matches(T.triangle(it.tri), j, long(w), b))
                stack.push_back({right, *nb});
        }
    }

    for (size_t v = 0; v < n; ++v)
        if (spt.par_[v] == -2) throw GeometryError("spt: vertex never attached");
    return spt;
}

std::vector<Point> ShortestPathTree::path_to(size_t v) const {
    std::vector<Point> rev;
    long node = long(v);
    while (node != SRC) {
        rev.push_back(tri_->polygon().vertex(size_t(node)));
        node = par_[size_t(node)];
    }
    rev.push_back(src_);
    std::reverse(rev.begin(), rev.end());
    return collapse_collinear(std::move(rev));
}

}  // namespace l1geo
