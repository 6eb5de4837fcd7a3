#pragma once

#include <cstdint>

#include "l1geo/geom.hpp"

namespace l1geo {

// Deterministic simple polygon with exactly n vertices on an integer grid:
// random points ordered angularly, then 2-opt untangled until simple.
Polygon random_polygon(size_t n, uint64_t seed);

}  // namespace l1geo
