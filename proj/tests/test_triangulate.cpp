#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "l1geo/random_polygon.hpp"
#include "l1geo/triangulate.hpp"

using namespace l1geo;
using namespace testutil;

namespace {

Scalar tri_area2(const Triangulation& T, size_t t) {
    const Polygon& P = T.polygon();
    const auto& tr = T.triangle(t);
    const Point &a = P.vertex(tr[0]), &b = P.vertex(tr[1]), &c = P.vertex(tr[2]);
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

void check_structure(const Polygon& P) {
    Triangulation T = Triangulation::build(P);
    size_t n = P.size();
    REQUIRE(T.triangle_count() == n - 2);
    CHECK(T.diagonals().size() == n - 3);
    Scalar covered = 0;
    for (size_t t = 0; t < T.triangle_count(); ++t) {
        Scalar a2 = tri_area2(T, t);
        CHECK(a2 > 0);  // CCW, nondegenerate
        covered += a2;
    }
    CHECK(covered == P.signed_area2());
    // Neighbor relation is symmetric and matches a shared diagonal.
    for (size_t t = 0; t < T.triangle_count(); ++t)
        for (size_t j = 0; j < 3; ++j)
            if (auto o = T.neighbor(t, j)) {
                bool back = false;
                for (size_t k = 0; k < 3; ++k)
                    if (T.neighbor(*o, k) == t) back = true;
                CHECK(back);
            }
    // Every vertex has an incident triangle.
    for (size_t v = 0; v < n; ++v) {
        const auto& tr = T.triangle(T.vertex_triangle(v));
        CHECK((tr[0] == v || tr[1] == v || tr[2] == v));
    }
}

}  // namespace

TEST_CASE("structure on the hand corpus") {
    for (const Polygon& P : corpus()) check_structure(P);
}

TEST_CASE("structure on random polygons") {
    for (uint64_t seed = 1; seed <= 8; ++seed) check_structure(random_polygon(24, seed));
}

TEST_CASE("deterministic ear order") {
    Polygon L = l_shape();
    Triangulation T1 = Triangulation::build(L);
    Triangulation T2 = Triangulation::build(L);
    REQUIRE(T1.triangle_count() == T2.triangle_count());
    for (size_t t = 0; t < T1.triangle_count(); ++t) CHECK(T1.triangle(t) == T2.triangle(t));
}

TEST_CASE("find_triangle and sleeve") {
    Polygon P = spiral();
    Triangulation T = Triangulation::build(P);
    Point a(S("1/2"), S("1/2")), b(S("9/2"), S("9/2"));
    size_t ta = T.find_triangle(a), tb = T.find_triangle(b);
    auto walk = T.sleeve(ta, tb);
    REQUIRE(!walk.empty());
    CHECK(walk.front().tri == ta);
    CHECK(walk.back().tri == tb);
    CHECK(!walk.front().entered_through);
    // Consecutive steps are dual-tree neighbors crossing the recorded diagonal.
    for (size_t i = 1; i < walk.size(); ++i) {
        REQUIRE(walk[i].entered_through);
        bool adjacent = false;
        for (size_t j = 0; j < 3; ++j)
            if (T.neighbor(walk[i - 1].tri, j) == walk[i].tri) adjacent = true;
        CHECK(adjacent);
    }
    // Same triangle: singleton sleeve.
    CHECK(T.sleeve(ta, ta).size() == 1);
    CHECK_THROWS_AS(T.find_triangle(Point(100, 100)), PointOutsidePolygon);
}
