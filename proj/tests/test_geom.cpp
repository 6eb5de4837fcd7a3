#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "l1geo/random_polygon.hpp"

using namespace l1geo;
using namespace testutil;

TEST_CASE("scalar parsing") {
    CHECK(*parse_scalar("3") == Scalar(3));
    CHECK(*parse_scalar("-5/7") == Scalar(-5, 7));
    CHECK(*parse_scalar("0.25") == Scalar(1, 4));
    CHECK(!parse_scalar("abc"));
    CHECK(format_scalar(Scalar(-5, 7)) == "-5/7");
    CHECK(format_scalar(Scalar(4) / 2) == "2");
}

TEST_CASE("orientation and segment predicates") {
    Point o(0, 0), e1(1, 0), e2(0, 1);
    CHECK(orientation(o, e1, e2) == Orientation::CCW);
    CHECK(orientation(o, e2, e1) == Orientation::CW);
    CHECK(orientation(o, e1, Point(2, 0)) == Orientation::Collinear);
    CHECK(on_segment(o, Point(2, 2), Point(1, 1)));
    CHECK(!on_segment(o, Point(2, 2), Point(3, 3)));
    CHECK(segments_intersect(o, Point(2, 2), Point(0, 2), Point(2, 0)));
    CHECK(segments_cross_properly(o, Point(2, 2), Point(0, 2), Point(2, 0)));
    CHECK(!segments_cross_properly(o, Point(2, 2), Point(1, 1), Point(2, 0)));
    CHECK(segments_intersect(o, Point(2, 2), Point(1, 1), Point(2, 0)));
    auto x = line_intersection(o, Point(2, 2), Point(0, 2), Point(2, 0));
    REQUIRE(x);
    CHECK(*x == Point(1, 1));
}

TEST_CASE("validate canonicalizes") {
    // CW input is reversed to CCW.
    Polygon cw = Polygon::validate({Point(0, 0), Point(0, 1), Point(1, 1), Point(1, 0)});
    CHECK(cw.signed_area2() > 0);
    // Collinear runs and duplicates are merged.
    Polygon col = Polygon::validate(
        {Point(0, 0), Point(1, 0), Point(2, 0), Point(2, 0), Point(2, 2), Point(0, 2)});
    CHECK(col.size() == 4);
    CHECK_THROWS_AS(Polygon::validate({Point(0, 0), Point(1, 1)}), ValidationError);
    CHECK_THROWS_AS(Polygon::validate({Point(0, 0), Point(1, 0), Point(2, 0)}), ValidationError);
    // Bow-tie is not simple.
    try {
        Polygon::validate({Point(0, 0), Point(2, 2), Point(2, 0), Point(0, 2)});
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(e.kind == ValidationError::Kind::NotSimple);
    }
}

TEST_CASE("locate_point classes") {
    Polygon L = l_shape();
    CHECK(locate_point(L, Point(S("1/2"), S("1/2"))).kind == Location::Kind::Interior);
    CHECK(locate_point(L, Point(2, 2)).kind == Location::Kind::Exterior);
    auto on_edge = locate_point(L, Point(1, 0));
    CHECK(on_edge.kind == Location::Kind::Boundary);
    CHECK(on_edge.edge == 0);
    auto at_vertex = locate_point(L, Point(2, 1));
    CHECK(at_vertex.kind == Location::Kind::Boundary);
    CHECK(at_vertex.edge == 2);
    // Reflex corner region: (3/2,3/2) is outside the L.
    CHECK(locate_point(L, Point(S("3/2"), S("3/2"))).kind == Location::Kind::Exterior);
}

TEST_CASE("ray_shoot") {
    Polygon L = l_shape();
    CHECK(ray_shoot(L, Point(S("1/2"), S("1/2")), Point(1, 0)) == Point(2, S("1/2")));
    CHECK(ray_shoot(L, Point(S("1/2"), S("1/2")), Point(0, 1)) == Point(S("1/2"), 2));
    // Through the reflex vertex and onward is blocked at the vertex.
    CHECK(ray_shoot(L, Point(2, 0), Point(-1, 1)) == Point(1, 1));
    // Ray exiting immediately returns the origin.
    CHECK(ray_shoot(L, Point(2, 0), Point(1, 0)) == Point(2, 0));
}

TEST_CASE("segment_in_polygon") {
    Polygon L = l_shape();
    CHECK(segment_in_polygon(L, Point(2, 0), Point(1, 1)));
    CHECK(segment_in_polygon(L, Point(0, 0), Point(2, 1)));
    CHECK(!segment_in_polygon(L, Point(2, 0), Point(1, 2)));
    CHECK(!segment_in_polygon(L, Point(2, 1), Point(1, 2)));
    CHECK(segment_in_polygon(L, Point(0, 0), Point(0, 2)));  // along the boundary
}

TEST_CASE("monotone path predicate") {
    CHECK(segment_points_monotone({Point(0, 0), Point(1, 1), Point(2, 1)}));
    CHECK(!segment_points_monotone({Point(0, 0), Point(2, 0), Point(1, 1)}));
    CHECK(segment_points_monotone({Point(5, 5)}));
}

TEST_CASE("random polygons validate and locate consistently") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Polygon P = random_polygon(16, seed);
        CHECK(P.size() == 16);
        CHECK(P.signed_area2() > 0);
        // Ring-based location agrees with the polygon-based one.
        for (size_t i = 0; i < P.size(); ++i) {
            Point mid((P.edge(i).first.x + P.edge(i).second.x) / 2,
                      (P.edge(i).first.y + P.edge(i).second.y) / 2);
            CHECK(locate_point(P, mid).kind == Location::Kind::Boundary);
            CHECK(locate_in_ring(P.vertices(), mid).kind == Location::Kind::Boundary);
        }
        Point inner = interior_point_of_ring(P.vertices());
        CHECK(locate_point(P, inner).kind == Location::Kind::Interior);
    }
}
