#pragma once

#include <string>

#include "l1geo/geom.hpp"

namespace l1geo {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Polygon file: {"vertices": [[x, y], ...]} where each coordinate is an
// integer, a decimal string, or a "p/q" fraction string.  Raw JSON floats
// are rejected unless float_ok (then converted exactly from their binary
// value).  Throws ParseError / ValidationError.
Polygon polygon_from_json_text(const std::string& text, bool float_ok = false);
std::string polygon_to_json_text(const Polygon& P);

Polygon load_polygon_file(const std::string& path, bool float_ok = false);
void save_polygon_file(const std::string& path, const Polygon& P);

std::string format_point(const Point& p);  // "(x,y)" with exact fractions

// FNV-1a 64-bit hash of the canonical polygon serialization, as hex.
std::string input_hash(const Polygon& P);

}  // namespace l1geo
