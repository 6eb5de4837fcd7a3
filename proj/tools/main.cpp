#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "l1geo/balls.hpp"
#include "l1geo/center.hpp"
#include "l1geo/checks.hpp"
#include "l1geo/diameter.hpp"
#include "l1geo/io.hpp"
#include "l1geo/oracle.hpp"
#include "l1geo/random_polygon.hpp"
#include "l1geo/svg.hpp"

using namespace l1geo;
using nlohmann::json;

namespace {

int64_t us_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

json point_json(const Point& p) {
    return json::array({format_scalar(p.x), format_scalar(p.y)});
}

Point parse_source(const Polygon& P, const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) {
        size_t idx = std::stoul(spec);
        if (idx >= P.size()) throw ParseError("vertex index " + spec + " out of range");
        return P.vertex(idx);
    }
    auto x = parse_scalar(spec.substr(0, comma));
    auto y = parse_scalar(spec.substr(comma + 1));
    if (!x || !y) throw ParseError("bad source point: " + spec);
    return Point(*x, *y);
}

int run_diameter(const Polygon& P, bool check, bool as_json, const std::string& svg_path) {
    auto t0 = std::chrono::steady_clock::now();
    DiameterResult D = diameter(P);
    int64_t us = us_since(t0);

    GeodesicPath path =
        shortest_path(Triangulation::build(P), P.vertex(D.pair.first), P.vertex(D.pair.second));
    if (!svg_path.empty())
        write_file(svg_path, render_svg(P, {{{path.waypoints}, "#d33", false}},
                                        {P.vertex(D.pair.first), P.vertex(D.pair.second)}));
    bool mismatch = false;
    if (check) {
        auto [opair, oval] = oracle_diameter(P);
        mismatch = oval != D.value;
        if (mismatch)
            std::cerr << "check: oracle diameter " << format_scalar(oval) << " != "
                      << format_scalar(D.value) << "\n";
    }
    if (as_json) {
        json out{{"command", "diameter"},
                 {"input_hash", input_hash(P)},
                 {"pair", json::array({D.pair.first, D.pair.second})},
                 {"pair_points", json::array({point_json(P.vertex(D.pair.first)),
                                              point_json(P.vertex(D.pair.second))})},
                 {"value", format_scalar(D.value)},
                 {"matrix_evaluations", D.matrix_evaluations},
                 {"time_us", us}};
        if (check) out["oracle_match"] = !mismatch;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "pair: " << D.pair.first << " " << D.pair.second << "\n"
                  << "points: " << format_point(P.vertex(D.pair.first)) << " "
                  << format_point(P.vertex(D.pair.second)) << "\n"
                  << "value: " << format_scalar(D.value) << "\n";
    }
    return mismatch ? 2 : 0;
}

int run_center(const Polygon& P, bool check, bool as_json, const std::string& svg_path,
               size_t trials, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    CenterResult C = center(P);
    int64_t us = us_since(t0);

    if (!svg_path.empty()) {
        SvgLayer seg{{{C.segment.first, C.segment.second}}, "#d33", false};
        write_file(svg_path, render_svg(P, {seg}, {C.segment.first, C.segment.second}));
    }
    bool mismatch = false;
    if (check) {
        OracleReport rep = oracle_center_check(P, C, trials, seed);
        mismatch = !rep.pass;
        if (mismatch) std::cerr << "check: " << rep.detail << "\n";
    }
    if (as_json) {
        json out{{"command", "center"},
                 {"input_hash", input_hash(P)},
                 {"radius", format_scalar(C.radius)},
                 {"is_point", C.is_point()},
                 {"segment", json::array({point_json(C.segment.first),
                                          point_json(C.segment.second)})},
                 {"time_us", us}};
        if (check) out["oracle_match"] = !mismatch;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "radius: " << format_scalar(C.radius) << "\n";
        if (C.is_point())
            std::cout << "center: " << format_point(C.segment.first) << "\n";
        else
            std::cout << "center: " << format_point(C.segment.first) << " "
                      << format_point(C.segment.second) << "\n";
    }
    return mismatch ? 2 : 0;
}

int run_ball(const Polygon& P, const std::string& source_spec, const std::string& radius_spec,
             bool as_json, const std::string& svg_path) {
    Point s = parse_source(P, source_spec);
    auto r = parse_scalar(radius_spec);
    if (!r) throw ParseError("bad radius: " + radius_spec);
    Triangulation T = Triangulation::build(P);
    auto t0 = std::chrono::steady_clock::now();
    ShortestPathMap M = ShortestPathMap::build(T, s);
    GeodesicBall ball = geodesic_ball(M, *r);
    int64_t us = us_since(t0);

    if (!svg_path.empty()) {
        SvgLayer cuts{{}, "#9a9", false};
        for (const SpmCell& c : M.cells()) cuts.polylines.push_back(c.ring);
        SvgLayer bd{{ball.boundary}, "#d33", ball.boundary.size() > 2};
        write_file(svg_path, render_svg(P, {cuts, bd}, {s}));
    }
    if (as_json) {
        json ring = json::array();
        for (const Point& p : ball.boundary) ring.push_back(point_json(p));
        json out{{"command", "ball"},     {"input_hash", input_hash(P)},
                 {"source", point_json(s)}, {"radius", format_scalar(*r)},
                 {"boundary", ring},      {"time_us", us}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "source: " << format_point(s) << "\nradius: " << format_scalar(*r) << "\n";
        for (const Point& p : ball.boundary) std::cout << format_point(p) << "\n";
    }
    return 0;
}

int run_check(std::optional<Polygon> P, size_t random_n, uint64_t seed, const CheckOptions& opt,
              bool as_json) {
    if (!P) P = random_polygon(random_n, seed);
    auto fail = run_property_checks(*P, opt);
    if (as_json) {
        json out{{"command", "check"},
                 {"input_hash", input_hash(*P)},
                 {"n", P->size()},
                 {"pass", !fail.has_value()}};
        if (fail) {
            out["property"] = fail->property;
            out["witness"] = fail->witness;
        }
        std::cout << out.dump(2) << "\n";
    } else if (fail) {
        std::cout << "FAIL " << fail->property << ": " << fail->witness << "\n";
    } else {
        std::cout << "pass (" << P->size() << " vertices, " << opt.trials << " trials)\n";
    }
    return fail ? 3 : 0;
}

int run_bench(const std::vector<size_t>& sizes, uint64_t seed, bool with_oracle) {
    std::cout << "n,diameter_us,center_us,oracle_us,ratio\n";
    int64_t prev_total = -1;
    for (size_t n : sizes) {
        Polygon P = random_polygon(n, seed);
        auto t0 = std::chrono::steady_clock::now();
        DiameterResult D = diameter(P);
        int64_t d_us = us_since(t0);
        t0 = std::chrono::steady_clock::now();
        center(P);
        int64_t c_us = us_since(t0);
        int64_t o_us = 0;
        if (with_oracle && n <= 256) {
            t0 = std::chrono::steady_clock::now();
            auto [opair, oval] = oracle_diameter(P);
            o_us = us_since(t0);
            if (oval != D.value) {
                std::cerr << "bench: oracle mismatch at n=" << n << "\n";
                return 2;
            }
        }
        int64_t total = d_us + c_us;
        char ratio[32] = "";
        if (prev_total > 0) snprintf(ratio, sizeof ratio, "%.3f", double(total) / prev_total);
        std::cout << n << "," << d_us << "," << c_us << "," << o_us << "," << ratio << "\n";
        prev_total = total;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"L1 geodesic diameter and center of a simple polygon"};
    app.require_subcommand(1);

    std::string file, svg_path, source_spec, radius_spec;
    bool check = false, as_json = false, float_ok = false;
    uint64_t seed = 1;
    size_t trials = 100, random_n = 0;
    CheckOptions copt;
    std::vector<size_t> sizes{1024, 2048, 4096, 8192, 16384};
    bool with_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file) cmd->add_option("file", file, "polygon file")->required();
        cmd->add_flag("--json", as_json, "machine-readable report");
        cmd->add_flag("--float-ok", float_ok, "accept raw float coordinates");
    };

    auto* cmd_diameter = app.add_subcommand("diameter", "geodesic diameter");
    add_common(cmd_diameter, true);
    cmd_diameter->add_flag("--check", check, "verify against the brute-force oracle");
    cmd_diameter->add_option("--svg", svg_path, "write an SVG rendering");

    auto* cmd_center = app.add_subcommand("center", "geodesic center set");
    add_common(cmd_center, true);
    cmd_center->add_flag("--check", check, "verify against the brute-force oracle");
    cmd_center->add_option("--svg", svg_path, "write an SVG rendering");
    cmd_center->add_option("--trials", trials, "oracle sample count");
    cmd_center->add_option("--seed", seed, "oracle sample seed");

    auto* cmd_ball = app.add_subcommand("ball", "geodesic ball polygon");
    add_common(cmd_ball, true);
    cmd_ball->add_option("--source", source_spec, "vertex index or x,y")->required();
    cmd_ball->add_option("--radius", radius_spec, "ball radius")->required();
    cmd_ball->add_option("--svg", svg_path, "write an SVG rendering");

    auto* cmd_check = app.add_subcommand("check", "property suites");
    add_common(cmd_check, false);
    cmd_check->add_option("file", file, "polygon file");
    cmd_check->add_option("--random", random_n, "generate a random polygon of this size");
    cmd_check->add_option("--seed", copt.seed, "random seed");
    cmd_check->add_option("--trials", copt.trials, "trials per property");
    cmd_check->add_flag("--mutate", copt.mutate, "self-test: break a comparison on purpose");
    cmd_check->add_flag("--with-oracle,!--no-oracle", copt.with_oracle,
                        "brute-force comparisons (small n)");

    auto* cmd_bench = app.add_subcommand("bench", "scaling benchmark CSV");
    cmd_bench->add_option("--sizes", sizes, "polygon sizes")->delimiter(',');
    cmd_bench->add_option("--seed", seed, "generator seed");
    cmd_bench->add_flag("--with-oracle", with_oracle, "time the oracle too (n <= 256)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cmd_diameter->parsed())
            return run_diameter(load_polygon_file(file, float_ok), check, as_json, svg_path);
        if (cmd_center->parsed())
            return run_center(load_polygon_file(file, float_ok), check, as_json, svg_path, trials,
                              seed);
        if (cmd_ball->parsed())
            return run_ball(load_polygon_file(file, float_ok), source_spec, radius_spec, as_json,
                            svg_path);
        if (cmd_check->parsed()) {
            if (file.empty() && random_n == 0) {
                std::cerr << "check: need a polygon file or --random n\n";
                return 1;
            }
            std::optional<Polygon> P;
            if (!file.empty()) P = load_polygon_file(file, float_ok);
            return run_check(std::move(P), random_n, copt.seed, copt, as_json);
        }
        if (cmd_bench->parsed()) return run_bench(sizes, seed, with_oracle);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
