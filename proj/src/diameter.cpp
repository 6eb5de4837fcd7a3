#include "l1geo/diameter.hpp"

#include <algorithm>

#include "l1geo/smawk.hpp"

namespace l1geo {

std::array<ChainPair, 3> decompose_chains(size_t n, size_t a, size_t b) {
    // Positions are 1-based (v1 ... vn); b = n+1 means the second division
    // point wrapped around to v1.
    if (n < 3 || a <= 1 || a >= b || b > n + 1 || a > n)
        throw IndexOutOfRange("decompose_chains: need 1 < a < b <= n+1");
    auto range = [&](size_t i, size_t j) {
        std::vector<size_t> out;
        for (size_t k = i; k <= j && k <= n; ++k) out.push_back(k - 1);
        return out;
    };
    auto append = [](std::vector<size_t> x, const std::vector<size_t>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    std::array<ChainPair, 3> out;
    out[0] = {range(2, a - 1), append(range(a, n), range(1, 1))};
    out[1] = {range(a + 1, b - 1), append(range(b, n), range(1, a))};
    out[2] = {range(b + 1, n), range(1, std::min(b, n))};
    return out;
}

std::pair<size_t, Scalar> farthest_vertex(const Triangulation& T, const Point& s) {
    ShortestPathTree spt = ShortestPathTree::build(T, s);
    size_t best = 0;
    for (size_t v = 1; v < spt.size(); ++v)
        if (spt.distance(v) > spt.distance(best)) best = v;
    return {best, spt.distance(best)};
}

Scalar FarthestMatrix::entry(size_t i, size_t j) {
    auto it = memo_.find({i, j});
    if (it != memo_.end()) return it->second;
    ++evals_;
    Scalar d = geodesic_distance(*tri_, pair_->U[i], pair_->W[j]);
    memo_.emplace(std::make_pair(i, j), d);
    return d;
}

std::vector<std::pair<size_t, Scalar>> restricted_farthest_neighbors(const Triangulation& T,
                                                                     const ChainPair& pair,
                                                                     size_t* evals) {
    if (pair.U.empty()) return {};
    if (pair.W.empty()) throw IndexOutOfRange("restricted_farthest_neighbors: empty W");
    FarthestMatrix M(T, pair);
    auto cols = smawk_row_maxima(M.rows(), M.cols(),
                                 [&](size_t i, size_t j) { return M.entry(i, j); });
    std::vector<std::pair<size_t, Scalar>> out;
    out.reserve(pair.U.size());
    for (size_t i = 0; i < pair.U.size(); ++i)
        out.push_back({pair.W[cols[i]], M.entry(i, cols[i])});
    if (evals) *evals += M.evaluations();
    return out;
}

DiameterResult diameter(const Polygon& P) {
    size_t n = P.size();
    Triangulation T = Triangulation::build(P);

    DiameterResult res;
    res.farthest.assign(n, {0, Scalar(0)});

    ShortestPathTree spt1 = ShortestPathTree::build(T, P.vertex(0));
    size_t va = 1;
    for (size_t v = 1; v < n; ++v)
        if (spt1.distance(v) > spt1.distance(va)) va = v;
    res.farthest[0] = {va, spt1.distance(va)};

    ShortestPathTree spta = ShortestPathTree::build(T, P.vertex(va));
    Scalar ecc_a = spta.distance(0);
    for (size_t v = 1; v < n; ++v)
        if (v != va) ecc_a = std::max(ecc_a, spta.distance(v));
    size_t a = va + 1;  // 1-based position

    // Pick v_b among the farthest neighbors of v_a: prefer a position after
    // a (no relabeling needed); otherwise mirror the polygon, which reverses
    // positions 2..n and makes any tie at position >= 2 land after a; a tie
    // only at v1 itself becomes the wrap case b = n+1.
    size_t b = 0;
    bool mirrored = false;
    for (size_t v = va + 1; v < n; ++v) {
        if (v != va && spta.distance(v) == ecc_a) {
            b = v + 1;
            break;
        }
    }
    if (b == 0) {
        size_t best = 0;  // largest 1-based position >= 2 holding the max
        for (size_t v = 1; v < va; ++v)
            if (spta.distance(v) == ecc_a) best = v + 1;
        if (best != 0) {
            mirrored = true;
            a = n + 2 - a;
            b = n + 2 - best;
        } else {
            if (spta.distance(0) != ecc_a)
                throw GeometryError("diameter: farthest neighbor bookkeeping failed");
            b = n + 1;  // v_b = v_1
        }
    }
    size_t vb = b == n + 1 ? 0 : (mirrored ? n + 1 - b : b - 1);
    res.farthest[va] = {vb, ecc_a};

    if (b != n + 1) {
        ShortestPathTree sptb = ShortestPathTree::build(T, P.vertex(vb));
        size_t fb = vb == 0 ? 1 : 0;
        for (size_t v = 0; v < n; ++v)
            if (v != vb && sptb.distance(v) > sptb.distance(fb)) fb = v;
        res.farthest[vb] = {fb, sptb.distance(fb)};
    }

    // Positions in the (possibly mirrored) labeling map back to vertex ids:
    // identity when not mirrored; v1 fixed and the rest reversed otherwise.
    auto vertex_of = [&](size_t pos) { return pos == 1 ? 0 : (mirrored ? n + 1 - pos : pos - 1); };
    for (ChainPair& cp : decompose_chains(n, a, b)) {
        for (auto* chain : {&cp.U, &cp.W})
            for (size_t& v : *chain) v = vertex_of(v + 1);
        auto table = restricted_farthest_neighbors(T, cp, &res.matrix_evaluations);
        for (size_t i = 0; i < cp.U.size(); ++i) res.farthest[cp.U[i]] = table[i];
    }

    size_t arg = 0;
    for (size_t v = 1; v < n; ++v)
        if (res.farthest[v].second > res.farthest[arg].second) arg = v;
    res.value = res.farthest[arg].second;
    res.pair = {std::min(arg, res.farthest[arg].first), std::max(arg, res.farthest[arg].first)};
    return res;
}

}  // namespace l1geo
