#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "l1geo/geom.hpp"

namespace l1geo {

struct CheckOptions {
    size_t trials = 100;
    uint64_t seed = 1;
    bool mutate = false;       // deliberately breaks a membership comparison
    bool with_oracle = true;   // brute-force comparisons (small n only)
};

struct CheckFailure {
    std::string property;
    std::string witness;
};

// Runs the structural property suites (ball geometry, P-convexity, Helly,
// convexity of the distance, SMAWK contract, interval formula, oracle
// equivalence) on one polygon; returns the first failure.
std::optional<CheckFailure> run_property_checks(const Polygon& P, const CheckOptions& opt);

}  // namespace l1geo
