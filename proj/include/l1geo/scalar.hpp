#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace l1geo {

// Exact rational scalar. All coordinates, distances and radii in this
// library are mpq_class values; there is no tolerance parameter anywhere.
using Scalar = mpq_class;

inline Scalar abs(const Scalar& v) { return v < 0 ? Scalar(-v) : v; }

inline int sign(const Scalar& v) { return sgn(v); }

// Parses "7", "-3/4" or a decimal string such as "0.25" (exactly, as 1/4).
// Returns nullopt on malformed input.
std::optional<Scalar> parse_scalar(const std::string& text);

// Exact conversion of a binary double (no rounding; 0.1 becomes the
// actual binary fraction the double stores).
Scalar scalar_from_double(double v);

// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string format_scalar(const Scalar& v);

// Decimal approximation for display-only output (SVG coordinates).
double to_double(const Scalar& v);

}  // namespace l1geo
