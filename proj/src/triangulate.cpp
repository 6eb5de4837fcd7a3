#include "l1geo/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace l1geo {

namespace {

// Bucket grid over vertices; doubles pick buckets, callers verify exactly.
class PointGrid {
  public:
    PointGrid(const std::vector<Point>& pts) {
        n_ = pts.size();
        xs_.reserve(n_);
        ys_.reserve(n_);
        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        for (const Point& p : pts) {
            double x = to_double(p.x), y = to_double(p.y);
            xs_.push_back(x);
            ys_.push_back(y);
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
        double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        dim_ = std::max<size_t>(1, static_cast<size_t>(std::sqrt(double(n_) + 1.0)));
        cell_ = span / double(dim_) * (1.0 + 1e-12);
        org_x_ = min_x;
        org_y_ = min_y;
        buckets_.resize(dim_ * dim_);
    }

    void insert(size_t v) { buckets_[bucket_of(v)].push_back(v); }
    void remove(size_t v) {
        auto& b = buckets_[bucket_of(v)];
        b.erase(std::find(b.begin(), b.end(), v));
    }

    template <typename F>
    void for_bbox(double lo_x, double hi_x, double lo_y, double hi_y, F&& f) const {
        size_t cx0 = clampi((lo_x - org_x_) / cell_), cx1 = clampi((hi_x - org_x_) / cell_);
        size_t cy0 = clampi((lo_y - org_y_) / cell_), cy1 = clampi((hi_y - org_y_) / cell_);
        for (size_t cx = cx0; cx <= cx1; ++cx)
            for (size_t cy = cy0; cy <= cy1; ++cy)
                for (size_t v : buckets_[cx * dim_ + cy]) f(v);
    }

    double x(size_t v) const { return xs_[v]; }
    double y(size_t v) const { return ys_[v]; }

  private:
    size_t clampi(double v) const {
        if (!(v > 0)) return 0;
        size_t i = static_cast<size_t>(v);
        return std::min(i, dim_ - 1);
    }
    size_t bucket_of(size_t v) const { return clampi((xs_[v] - org_x_) / cell_) * dim_ + clampi((ys_[v] - org_y_) / cell_); }

    size_t n_ = 0, dim_ = 1;
    double cell_ = 1, org_x_ = 0, org_y_ = 0;
    std::vector<double> xs_, ys_;
    std::vector<std::vector<size_t>> buckets_;
};

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
    return orientation_sign(a, b, p) >= 0 && orientation_sign(b, c, p) >= 0 &&
           orientation_sign(c, a, p) >= 0;
}

}  // namespace

Triangulation Triangulation::build(const Polygon& P) {
    Triangulation T;
    T.poly_ = &P;
    size_t n = P.size();
    const auto& v = P.vertices();

    std::vector<size_t> nxt(n), prv(n);
    for (size_t i = 0; i < n; ++i) {
        nxt[i] = (i + 1) % n;
        prv[i] = (i + n - 1) % n;
    }
    std::vector<bool> reflex(n, false);
    auto is_reflex = [&](size_t i) { return orientation_sign(v[prv[i]], v[i], v[nxt[i]]) <= 0; };
    PointGrid grid(v);
    size_t reflex_count = 0;
    for (size_t i = 0; i < n; ++i) {
        reflex[i] = is_reflex(i);
        if (reflex[i]) {
            grid.insert(i);
            ++reflex_count;
        }
    }

    std::set<size_t> alive;
    for (size_t i = 0; i < n; ++i) alive.insert(i);

    auto ear_ok = [&](size_t i) {
        size_t p = prv[i], q = nxt[i];
        if (orientation_sign(v[p], v[i], v[q]) <= 0) return false;
        if (reflex_count == 0) return true;
        bool blocked = false;
        double lo_x = std::min({grid.x(p), grid.x(i), grid.x(q)});
        double hi_x = std::max({grid.x(p), grid.x(i), grid.x(q)});
        double lo_y = std::min({grid.y(p), grid.y(i), grid.y(q)});
        double hi_y = std::max({grid.y(p), grid.y(i), grid.y(q)});
        grid.for_bbox(lo_x, hi_x, lo_y, hi_y, [&](size_t w) {
            if (blocked || w == p || w == i || w == q) return;
            if (in_closed_triangle(v[p], v[i], v[q], v[w])) blocked = true;
        });
        return !blocked;
    };

    std::map<std::pair<size_t, size_t>, std::vector<size_t>> edge_tris;
    auto emit = [&](size_t a, size_t b, size_t c) {
        size_t t = T.tris_.size();
        T.tris_.push_back({a, b, c});
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}})
            edge_tris[std::minmax(x, y)].push_back(t);
    };

    while (alive.size() > 3) {
        // Lowest-index valid ear first, for determinism.
        size_t ear = NONE;
        for (size_t i : alive) {
            if (ear_ok(i)) {
                ear = i;
                break;
            }
        }
        if (ear == NONE) throw GeometryError("triangulate: no ear found");
        size_t p = prv[ear], q = nxt[ear];
        emit(p, ear, q);
        T.diagonals_.push_back({p, q});
        alive.erase(ear);
        if (reflex[ear]) {  // cannot happen for a clipped ear, kept for safety
            grid.remove(ear);
            --reflex_count;
        }
        nxt[p] = q;
        prv[q] = p;
        for (size_t w : {p, q}) {
            bool now = is_reflex(w);
            if (now != reflex[w]) {
                if (now) {
                    grid.insert(w);
                    ++reflex_count;
                } else {
                    grid.remove(w);
                    --reflex_count;
                }
                reflex[w] = now;
            }
        }
    }
    auto it = alive.begin();
    size_t a = *it++, b = *it++, c = *it;
    if (orientation_sign(v[a], v[b], v[c]) < 0) std::swap(b, c);
    emit(a, b, c);

    // Neighbors and the dual tree.
    size_t m = T.tris_.size();
    T.nbr_.assign(m, {NONE, NONE, NONE});
    for (size_t t = 0; t < m; ++t) {
        for (size_t j = 0; j < 3; ++j) {
            auto key = std::minmax(T.tris_[t][j], T.tris_[t][(j + 1) % 3]);
            for (size_t o : edge_tris[key])
                if (o != t) T.nbr_[t][j] = o;
        }
    }
    T.vert_tri_.assign(n, NONE);
    for (size_t t = 0; t < m; ++t)
        for (size_t j = 0; j < 3; ++j) T.vert_tri_[T.tris_[t][j]] = t;

    T.dual_parent_.assign(m, NONE);
    T.parent_diag_.assign(m, Diagonal{0, 0});
    T.dual_depth_.assign(m, 0);
    std::vector<size_t> stack{0};
    std::vector<bool> seen(m, false);
    seen[0] = true;
    while (!stack.empty()) {
        size_t t = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < 3; ++j) {
            size_t o = T.nbr_[t][j];
            if (o == NONE || seen[o]) continue;
            seen[o] = true;
            T.dual_parent_[o] = t;
            T.parent_diag_[o] = Diagonal{T.tris_[t][j], T.tris_[t][(j + 1) % 3]};
            T.dual_depth_[o] = T.dual_depth_[t] + 1;
            stack.push_back(o);
        }
    }
    return T;
}

size_t Triangulation::find_triangle(const Point& x) const {
    const auto& v = poly_->vertices();
    for (size_t t = 0; t < tris_.size(); ++t) {
        const auto& tr = tris_[t];
        if (in_closed_triangle(v[tr[0]], v[tr[1]], v[tr[2]], x)) return t;
    }
    throw PointOutsidePolygon();
}

std::vector<SleeveStep> Triangulation::sleeve(size_t from, size_t to) const {
    std::vector<size_t> up_a{from}, up_b{to};
    size_t a = from, b = to;
    while (dual_depth_[a] > dual_depth_[b]) up_a.push_back(a = dual_parent_[a]);
    while (dual_depth_[b] > dual_depth_[a]) up_b.push_back(b = dual_parent_[b]);
    while (a != b) {
        up_a.push_back(a = dual_parent_[a]);
        up_b.push_back(b = dual_parent_[b]);
    }
    std::vector<SleeveStep> out;
    out.push_back({from, std::nullopt});
    for (size_t i = 1; i < up_a.size(); ++i)
        out.push_back({up_a[i], parent_diag_[up_a[i - 1]]});
    for (size_t i = up_b.size(); i-- > 1;)
        out.push_back({up_b[i - 1], parent_diag_[up_b[i - 1]]});
    return out;
}

}  // namespace l1geo
