#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "l1geo/geodesic.hpp"

namespace l1geo {

class IndexOutOfRange : public GeometryError {
  public:
    explicit IndexOutOfRange(const std::string& what) : GeometryError(what) {}
};

// Two disjoint contiguous vertex chains that together cover all vertices.
struct ChainPair {
    std::vector<size_t> U;
    std::vector<size_t> W;
};

// Splits the vertex set around positions a < b (1-based, v1 = vertex 0) into
// the three chain pairs of the diameter algorithm.  b = n+1 denotes the wrap
// case where the second division point is v1 itself.
std::array<ChainPair, 3> decompose_chains(size_t n, size_t a, size_t b);

// Farthest polygon vertex from s with its geodesic distance; ties break to
// the lowest vertex index.
std::pair<size_t, Scalar> farthest_vertex(const Triangulation& T, const Point& s);

// Implicit matrix entry(i,j) = d(U[i], W[j]), memoized, with an evaluation
// counter for the SMAWK complexity gate.
class FarthestMatrix {
  public:
    FarthestMatrix(const Triangulation& T, const ChainPair& pair) : tri_(&T), pair_(&pair) {}

    size_t rows() const { return pair_->U.size(); }
    size_t cols() const { return pair_->W.size(); }
    Scalar entry(size_t i, size_t j);
    size_t evaluations() const { return evals_; }

  private:
    const Triangulation* tri_;
    const ChainPair* pair_;
    std::map<std::pair<size_t, size_t>, Scalar> memo_;
    size_t evals_ = 0;
};

// For each u in pair.U, a vertex of pair.W attaining max d(u, w), via SMAWK.
// Adds the number of matrix evaluations to *evals when given.
std::vector<std::pair<size_t, Scalar>> restricted_farthest_neighbors(const Triangulation& T,
                                                                     const ChainPair& pair,
                                                                     size_t* evals = nullptr);

struct DiameterResult {
    std::pair<size_t, size_t> pair;  // vertex indices of a diametral pair
    Scalar value;
    // Per-vertex farthest neighbor and distance (vertex eccentricity).
    std::vector<std::pair<size_t, Scalar>> farthest;
    size_t matrix_evaluations = 0;
};

DiameterResult diameter(const Polygon& P);

}  // namespace l1geo
