#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "l1geo/scalar.hpp"

namespace l1geo {

// Row maxima of a totally monotone matrix (argmax columns nondecreasing down
// the rows) in O(rows + cols) entry evaluations.  Ties break to the smallest
// column.  For matrices that are not totally monotone the result is garbage.
std::vector<size_t> smawk_row_maxima(size_t rows, size_t cols,
                                     const std::function<Scalar(size_t, size_t)>& entry);

}  // namespace l1geo
