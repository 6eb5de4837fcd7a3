#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "l1geo/balls.hpp"
#include "l1geo/diameter.hpp"

using namespace l1geo;
using namespace testutil;

namespace {

bool same_ring(std::vector<Point> a, std::vector<Point> b) {
    if (a.size() != b.size()) return false;
    for (size_t shift = 0; shift < a.size(); ++shift) {
        if (std::equal(a.begin(), a.end(), b.begin())) return true;
        std::rotate(b.begin(), b.begin() + 1, b.end());
    }
    return false;
}

}  // namespace

TEST_CASE("diamond ball goldens") {
    Polygon D = diamond();
    Triangulation T = Triangulation::build(D);
    ShortestPathMap M = ShortestPathMap::build(T, Point(1, 0));

    GeodesicBall half = geodesic_ball(M, Scalar(1));
    CHECK(same_ring(half.boundary, {Point(1, 0), Point(S("1/2"), S("1/2")), Point(0, 0),
                                    Point(S("1/2"), S("-1/2"))}));

    GeodesicBall all = geodesic_ball(M, Scalar(2));
    CHECK(same_ring(all.boundary, D.vertices()));

    GeodesicBall pt = geodesic_ball(M, Scalar(0));
    CHECK(pt.is_point());
    CHECK(pt.boundary[0] == Point(1, 0));

    CHECK(geodesic_ball(M, Scalar(-1)).empty());
}

TEST_CASE("contains and intersect predicates") {
    Polygon D = diamond();
    Triangulation T = Triangulation::build(D);
    CHECK(ball_contains(T, Point(1, 0), Scalar(1), Point(0, 0)));
    CHECK(!ball_contains(T, Point(1, 0), Scalar(1), Point(-1, 0)));
    CHECK(ball_contains(T, Point(1, 0), Scalar(0), Point(1, 0)));
    CHECK_THROWS_AS(ball_contains(T, Point(1, 0), Scalar(1), Point(5, 5)), PointOutsidePolygon);

    CHECK(balls_intersect(T, Point(1, 0), Point(-1, 0), Scalar(1)));
    CHECK(!balls_intersect(T, Point(1, 0), Point(-1, 0), S("9/10")));
    CHECK(balls_intersect(T, Point(1, 0), Point(1, 0), Scalar(0)));
}

TEST_CASE("triple_common_point") {
    Polygon D = diamond();
    Triangulation T = Triangulation::build(D);
    auto ball_at = [&](const Point& s, const Scalar& r) {
        return geodesic_ball(ShortestPathMap::build(T, s), r);
    };
    GeodesicBall b1 = ball_at(Point(1, 0), 1), b2 = ball_at(Point(0, 1), 1),
                 b3 = ball_at(Point(-1, 0), 1);
    auto common = triple_common_point(T, b1, b2, b3);
    REQUIRE(common);
    for (const Point& s : {Point(1, 0), Point(0, 1), Point(-1, 0)})
        CHECK(geodesic_distance(T, s, *common) <= 1);

    // Pairwise-disjoint tiny balls have no common point.
    GeodesicBall t1 = ball_at(Point(1, 0), S("1/10")), t2 = ball_at(Point(0, 1), S("1/10")),
                 t3 = ball_at(Point(-1, 0), S("1/10"));
    CHECK(!triple_common_point(T, t1, t2, t3));

    // Identical balls: trivially a common point.
    CHECK(triple_common_point(T, b1, b1, b1));
}

TEST_CASE("ball structure on the corpus") {
    for (const Polygon& P : corpus()) {
        Triangulation T = Triangulation::build(P);
        Scalar diam = diameter(P).value;
        for (size_t sv : {size_t(0), P.size() / 2}) {
            Point s = P.vertex(sv);
            ShortestPathMap M = ShortestPathMap::build(T, s);
            ShortestPathTree spt = ShortestPathTree::build(T, s);
            std::vector<Point> prev;
            for (int num = 1; num <= 4; ++num) {
                Scalar r = diam * num / 4;
                GeodesicBall B = geodesic_ball(M, r);
                REQUIRE(B.boundary.size() >= 1);
                size_t m = B.boundary.size();
                for (size_t i = 0; i < m && m >= 3; ++i) {
                    const Point& u = B.boundary[i];
                    const Point& v = B.boundary[(i + 1) % m];
                    bool unit_slope = abs(v.x - u.x) == abs(v.y - u.y);
                    bool on_bd = false;
                    for (size_t e = 0; e < P.size(); ++e) {
                        auto [a, b] = P.edge(e);
                        if (on_segment(a, b, u) && on_segment(a, b, v)) on_bd = true;
                    }
                    CHECK((unit_slope || on_bd));
                    // Interior ball vertices sit exactly at distance r.
                    if (locate_point(P, u).kind == Location::Kind::Interior)
                        CHECK(geodesic_distance(T, s, u) == r);
                    else
                        CHECK(geodesic_distance(T, s, u) <= r);
                }
                // Monotone in r.
                for (const Point& x : prev) CHECK(locate_in_ring(B.boundary, x).inside());
                prev = B.boundary;
                if (auto w = pconvexity_witness(T, B, 60, 17 * num + sv))
                    FAIL("pconvexity witness " << format_scalar(w->first.x));
            }
            // r >= diam covers everything: eccentricity of s bounds every vertex.
            GeodesicBall full = geodesic_ball(M, diam);
            for (size_t v = 0; v < P.size(); ++v) {
                CHECK(spt.distance(v) <= diam);
                CHECK(locate_in_ring(full.boundary, P.vertex(v)).inside());
            }
        }
    }
}

TEST_CASE("pconvexity witness finds a planted violation") {
    // A notched ring polygon that is NOT a geodesic ball: a horizontal
    // segment crosses the notch and meets it in two components.
    Polygon P = poly({{"0", "0"}, {"8", "0"}, {"8", "8"}, {"0", "8"}});
    Triangulation T = Triangulation::build(P);
    GeodesicBall fake{Point(4, 1), Scalar(1),
                      {Point(1, 1), Point(7, 1), Point(7, 6), Point(4, 2), Point(1, 6)}};
    auto w = pconvexity_witness(T, fake, 400, 5);
    CHECK(w.has_value());
    // Empty ball: vacuous.
    GeodesicBall empty{Point(4, 1), Scalar(-1), {}};
    CHECK(!pconvexity_witness(T, empty, 100, 5));
}
