#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l1geo/center.hpp"

namespace l1geo {

// Brute-force ground truth: shortest paths over the visibility graph of the
// polygon vertices (plus query points) with exact L1 weights.  O(n^3)-ish;
// intended for small instances only.

Scalar oracle_distance(const Polygon& P, const Point& p, const Point& q);

// Max over all vertex pairs, with a maximizing pair (lowest indices on ties).
std::pair<std::pair<size_t, size_t>, Scalar> oracle_diameter(const Polygon& P);

// Max over polygon vertices of oracle_distance(x, v).
Scalar oracle_eccentricity(const Polygon& P, const Point& x);

struct OracleReport {
    bool pass;
    std::string detail;  // first violated assertion with its witness
};

// Checks a center result: endpoints and midpoint have eccentricity exactly
// result.radius, random interior points have eccentricity >= radius, and
// chord points just outside the segment have strictly larger eccentricity.
OracleReport oracle_center_check(const Polygon& P, const CenterResult& result, size_t samples,
                                 uint64_t seed);

// Pays the all-pairs vertex distance table once so that repeated queries on
// one polygon (diameter plus many eccentricities) share the O(n^3) setup.
class VertexOracle {
  public:
    explicit VertexOracle(const Polygon& P);

    std::pair<std::pair<size_t, size_t>, Scalar> diameter() const;
    Scalar eccentricity(const Point& x) const;  // x must lie in P
    OracleReport center_check(const CenterResult& result, size_t samples, uint64_t seed) const;

  private:
    const Polygon& P_;
    std::vector<std::vector<Scalar>> D_;  // vertex-to-vertex geodesic distances
};

struct TmViolation {
    size_t i, j, k, l;  // rows i < j, columns k < l
};

// Samples random quadruples and verifies the quadrangle inequality
// d(u_j,w_k) + d(u_i,w_l) <= d(u_j,w_l) + d(u_i,w_k) exactly.
std::optional<TmViolation> check_totally_monotone(const Polygon& P, const ChainPair& pair,
                                                  size_t quadruples, uint64_t seed);

}  // namespace l1geo
