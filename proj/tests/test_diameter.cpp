#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "l1geo/diameter.hpp"
#include "l1geo/oracle.hpp"
#include "l1geo/random_polygon.hpp"

using namespace l1geo;
using namespace testutil;

TEST_CASE("farthest_vertex") {
    Polygon D = diamond();
    Triangulation TD = Triangulation::build(D);
    auto [v, dist] = farthest_vertex(TD, Point(1, 0));
    CHECK(v == 1);  // (0,1), lowest index among three vertices at distance 2
    CHECK(dist == 2);
    auto [vc, dc] = farthest_vertex(TD, Point(0, 0));
    CHECK(vc == 0);
    CHECK(dc == 1);

    Polygon L = l_shape();
    Triangulation TL = Triangulation::build(L);
    auto [vl, dl] = farthest_vertex(TL, Point(2, 0));
    CHECK(L.vertex(vl) == Point(0, 2));
    CHECK(dl == 4);
}

TEST_CASE("restricted farthest neighbors, single row") {
    Polygon L = l_shape();
    Triangulation T = Triangulation::build(L);
    ChainPair cp;
    cp.U = {1};  // (2,0)
    for (size_t v = 0; v < L.size(); ++v)
        if (v != 1) cp.W.push_back(v);
    auto out = restricted_farthest_neighbors(T, cp);
    REQUIRE(out.size() == 1);
    CHECK(L.vertex(out[0].first) == Point(0, 2));
    CHECK(out[0].second == 4);
}

TEST_CASE("diameter goldens") {
    DiameterResult dd = diameter(diamond());
    CHECK(dd.value == 2);
    CHECK(l1_distance(diamond().vertex(dd.pair.first), diamond().vertex(dd.pair.second)) == 2);

    DiameterResult df = diameter(pinched_diamond());
    CHECK(df.value == S("17/7"));
    CHECK(df.pair == std::pair<size_t, size_t>{2, 5});

    DiameterResult dl = diameter(l_shape());
    CHECK(dl.value == 4);
    Polygon L = l_shape();
    CHECK(((L.vertex(dl.pair.first) == Point(2, 0) && L.vertex(dl.pair.second) == Point(0, 2)) ||
           (L.vertex(dl.pair.first) == Point(0, 2) && L.vertex(dl.pair.second) == Point(2, 0))));
}

TEST_CASE("matches the oracle with a full farthest table") {
    auto verify = [](const Polygon& P) {
        DiameterResult res = diameter(P);
        auto [opair, oval] = oracle_diameter(P);
        CHECK(res.value == oval);
        CHECK(oracle_distance(P, P.vertex(res.pair.first), P.vertex(res.pair.second)) ==
              res.value);
        REQUIRE(res.farthest.size() == P.size());
        for (size_t v = 0; v < P.size(); ++v) {
            CHECK(res.farthest[v].second ==
                  oracle_distance(P, P.vertex(v), P.vertex(res.farthest[v].first)));
            for (size_t w = 0; w < P.size(); ++w)
                CHECK(res.farthest[v].second >= oracle_distance(P, P.vertex(v), P.vertex(w)));
        }
        CHECK(res.matrix_evaluations <= 8 * 4 * P.size());
    };
    for (const Polygon& P : corpus()) verify(P);
    for (uint64_t seed = 1; seed <= 10; ++seed) verify(random_polygon(14, seed));
}

TEST_CASE("invariant under rotation and reflection") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Polygon P = random_polygon(12, seed);
        Scalar base = diameter(P).value;
        std::vector<Point> rot(P.vertices().begin() + 3, P.vertices().end());
        rot.insert(rot.end(), P.vertices().begin(), P.vertices().begin() + 3);
        CHECK(diameter(Polygon::validate(rot)).value == base);
        std::vector<Point> mir;
        for (const Point& p : P.vertices()) mir.push_back(Point(-p.x, p.y));
        CHECK(diameter(Polygon::validate(mir)).value == base);
    }
}
