#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "l1geo/oracle.hpp"
#include "l1geo/random_polygon.hpp"

using namespace l1geo;
using namespace testutil;

TEST_CASE("oracle distances") {
    Polygon D = diamond();
    CHECK(oracle_distance(D, Point(1, 0), Point(-1, 0)) == 2);
    CHECK(oracle_distance(D, Point(1, 0), Point(1, 0)) == 0);

    Polygon L = l_shape();
    CHECK(oracle_distance(L, Point(2, 0), Point(1, 2)) == 3);
    CHECK(oracle_distance(L, Point(2, 0), Point(0, 2)) == 4);
    CHECK_THROWS_AS(oracle_distance(L, Point(2, 0), Point(9, 9)), PointOutsidePolygon);
}

TEST_CASE("oracle diameter with lowest-index ties") {
    auto [dp, dv] = oracle_diameter(diamond());
    CHECK(dv == 2);
    CHECK(dp == std::pair<size_t, size_t>{0, 1});

    auto [lp, lv] = oracle_diameter(l_shape());
    CHECK(lv == 4);
    CHECK(lp == std::pair<size_t, size_t>{1, 5});

    auto [fp, fv] = oracle_diameter(pinched_diamond());
    CHECK(fv == S("17/7"));
    CHECK(fp == std::pair<size_t, size_t>{2, 5});
}

TEST_CASE("metric axioms on random instances") {
    std::mt19937_64 rng(9);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Polygon P = random_polygon(12, seed);
        size_t n = P.size();
        for (int t = 0; t < 20; ++t) {
            const Point &p = P.vertex(rng() % n), &q = P.vertex(rng() % n),
                        &r = P.vertex(rng() % n);
            Scalar dpq = oracle_distance(P, p, q);
            CHECK(dpq == oracle_distance(P, q, p));
            CHECK(dpq >= l1_distance(p, q));
            CHECK(dpq <= oracle_distance(P, p, r) + oracle_distance(P, r, q));
            if (segment_in_polygon(P, p, q)) CHECK(dpq == l1_distance(p, q));
        }
    }
}

TEST_CASE("eccentricity") {
    Polygon L = l_shape();
    CHECK(oracle_eccentricity(L, Point(1, 1)) == 2);
    CHECK(oracle_eccentricity(L, Point(S("1/2"), S("1/2"))) == 2);
    CHECK(oracle_eccentricity(L, Point(2, 0)) == 4);
    CHECK(oracle_eccentricity(L, Point(0, 0)) == 3);
}

TEST_CASE("center check rejects wrong answers") {
    Polygon L = l_shape();
    // Correct result passes.
    CenterResult good{Scalar(2), {Point(S("1/2"), S("1/2")), Point(1, 1)}};
    CHECK(oracle_center_check(L, good, 20, 1).pass);
    // Wrong radius fails.
    CenterResult bad_r{Scalar(3, 2), {Point(S("1/2"), S("1/2")), Point(1, 1)}};
    CHECK(!oracle_center_check(L, bad_r, 20, 1).pass);
    // Off-center point fails.
    CenterResult bad_p{Scalar(2), {Point(S("1/4"), S("1/4")), Point(S("1/4"), S("1/4"))}};
    CHECK(!oracle_center_check(L, bad_p, 20, 1).pass);
    // Truncated segment fails (the probes just beyond the ends must be worse,
    // but here they are not).
    CenterResult trunc{Scalar(2), {Point(S("5/8"), S("5/8")), Point(S("7/8"), S("7/8"))}};
    CHECK(!oracle_center_check(L, trunc, 20, 1).pass);
}

TEST_CASE("quadrangle inequality sampler") {
    Polygon P = spiral();
    ChainPair cp;
    for (size_t v = 1; v < 1 + P.size() / 2; ++v) cp.U.push_back(v);
    for (size_t v = 1 + P.size() / 2; v < P.size(); ++v) cp.W.push_back(v);
    cp.W.push_back(0);
    CHECK(!check_totally_monotone(P, cp, 300, 2));
}
