#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "l1geo/io.hpp"
#include "l1geo/svg.hpp"

using namespace l1geo;
using namespace testutil;

TEST_CASE("parsing accepted forms") {
    Polygon P = polygon_from_json_text(
        R"({"vertices": [[1, 0], ["0", "1"], ["-5/7", "4/7"], [-1, 0], [0, -1], ["6/7", "-2/7"]]})");
    CHECK(P.size() == 6);
    CHECK(P.vertex(2) == Point(S("-5/7"), S("4/7")));

    Polygon dec = polygon_from_json_text(R"({"vertices": [["0.5", "0"], [1, 1], [0, 1]]})");
    CHECK(dec.vertex(0) == Point(S("1/2"), Scalar(0)));
}

TEST_CASE("parsing rejections") {
    CHECK_THROWS_AS(polygon_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(polygon_from_json_text(R"({"points": []})"), ParseError);
    CHECK_THROWS_AS(polygon_from_json_text(R"({"vertices": [[1], [2, 3], [4, 5]]})"), ParseError);
    CHECK_THROWS_AS(polygon_from_json_text(R"({"vertices": [["x", 0], [1, 0], [0, 1]]})"),
                    ParseError);
    // Raw floats are lossy; rejected unless opted in.
    std::string floats = R"({"vertices": [[0.5, 0], [1, 1], [0, 1]]})";
    CHECK_THROWS_AS(polygon_from_json_text(floats), ParseError);
    Polygon ok = polygon_from_json_text(floats, true);
    CHECK(ok.vertex(0) == Point(S("1/2"), Scalar(0)));  // 0.5 is exact in binary
    // Bow-tie parses but fails validation.
    CHECK_THROWS_AS(
        polygon_from_json_text(R"({"vertices": [[0,0], [2,2], [2,0], [0,2]]})"),
        ValidationError);
}

TEST_CASE("round trip") {
    for (const Polygon& P : corpus()) {
        Polygon back = polygon_from_json_text(polygon_to_json_text(P));
        REQUIRE(back.size() == P.size());
        for (size_t i = 0; i < P.size(); ++i) CHECK(back.vertex(i) == P.vertex(i));
        CHECK(input_hash(back) == input_hash(P));
    }
    CHECK(input_hash(diamond()) != input_hash(l_shape()));
}

TEST_CASE("format_point") {
    CHECK(format_point(Point(S("-5/7"), S("4/7"))) == "(-5/7,4/7)");
    CHECK(format_point(Point(2, 0)) == "(2,0)");
}

TEST_CASE("svg output is deterministic and well formed") {
    Polygon L = l_shape();
    SvgLayer seg{{{Point(S("1/2"), S("1/2")), Point(1, 1)}}, "#d33", false};
    std::string a = render_svg(L, {seg}, {Point(1, 1)});
    std::string b = render_svg(L, {seg}, {Point(1, 1)});
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
    CHECK(a.find("<polyline") != std::string::npos);
    CHECK(a.find("<circle") != std::string::npos);
    CHECK(a.rfind("</svg>\n") == a.size() - 7);
}
