#include "l1geo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace l1geo {

namespace {

Scalar coord_from_json(const nlohmann::json& j, bool float_ok) {
    if (j.is_number_integer()) return Scalar(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_number_unsigned()) return Scalar(mpz_class(std::to_string(j.get<unsigned long long>())));
    if (j.is_string()) {
        auto v = parse_scalar(j.get<std::string>());
        if (!v) throw ParseError("bad coordinate string: " + j.get<std::string>());
        return *v;
    }
    if (j.is_number_float()) {
        if (!float_ok)
            throw ParseError("raw float coordinate " + j.dump() +
                             " (pass --float-ok to convert its exact binary value)");
        return scalar_from_double(j.get<double>());
    }
    throw ParseError("coordinate must be an integer or string, got " + j.dump());
}

}  // namespace

Polygon polygon_from_json_text(const std::string& text, bool float_ok) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("expected an object with a \"vertices\" array");
    std::vector<Point> pts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw ParseError("each vertex must be a [x, y] pair, got " + v.dump());
        pts.push_back(Point(coord_from_json(v[0], float_ok), coord_from_json(v[1], float_ok)));
    }
    return Polygon::validate(std::move(pts));
}

std::string polygon_to_json_text(const Polygon& P) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& p : P.vertices()) {
        nlohmann::json pair = nlohmann::json::array();
        for (const Scalar* c : {&p.x, &p.y}) {
            if (c->get_den() == 1 && c->get_num().fits_slong_p())
                pair.push_back(c->get_num().get_si());
            else
                pair.push_back(format_scalar(*c));
        }
        verts.push_back(pair);
    }
    nlohmann::json out;
    out["vertices"] = verts;
    return out.dump(2) + "\n";
}

Polygon load_polygon_file(const std::string& path, bool float_ok) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return polygon_from_json_text(ss.str(), float_ok);
}

void save_polygon_file(const std::string& path, const Polygon& P) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << polygon_to_json_text(P);
}

std::string format_point(const Point& p) {
    return "(" + format_scalar(p.x) + "," + format_scalar(p.y) + ")";
}

std::string input_hash(const Polygon& P) {
    std::string bytes;
    for (const Point& p : P.vertices()) bytes += format_point(p) + ";";
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace l1geo
