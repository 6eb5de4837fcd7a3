#include "l1geo/smawk.hpp"

#include "l1geo/geom.hpp"

namespace l1geo {

namespace {

// Classic SMAWK: REDUCE keeps at most |rows| candidate columns, recurse on
// the odd rows, then fill even rows by scanning between their neighbors'
// answers.  Entries are compared so that the leftmost maximum survives.
void smawk_rec(const std::vector<size_t>& rows, const std::vector<size_t>& cols,
               const std::function<Scalar(size_t, size_t)>& entry, std::vector<size_t>& argmax) {
    if (rows.empty()) return;

    std::vector<size_t> kept;
    kept.reserve(rows.size());
    for (size_t c : cols) {
        while (!kept.empty()) {
            size_t r = rows[kept.size() - 1];
            if (entry(r, kept.back()) < entry(r, c))
                kept.pop_back();
            else
                break;
        }
        if (kept.size() < rows.size()) kept.push_back(c);
    }

    std::vector<size_t> odd;
    for (size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
    smawk_rec(odd, kept, entry, argmax);

    size_t start = 0;
    for (size_t i = 0; i < rows.size(); i += 2) {
        size_t stop = kept.size() - 1;
        if (i + 1 < rows.size()) {
            while (kept[stop] != argmax[rows[i + 1]]) --stop;
        }
        size_t best = start;
        Scalar best_val = entry(rows[i], kept[start]);
        for (size_t j = start + 1; j <= stop; ++j) {
            Scalar v = entry(rows[i], kept[j]);
            if (v > best_val) {
                best = j;
                best_val = v;
            }
        }
        argmax[rows[i]] = kept[best];
        start = stop;
    }
}

}  // namespace

std::vector<size_t> smawk_row_maxima(size_t rows, size_t cols,
                                     const std::function<Scalar(size_t, size_t)>& entry) {
    if (rows == 0) return {};
    if (cols == 0) throw GeometryError("smawk: no columns");
    std::vector<size_t> row_ids(rows), col_ids(cols), argmax(rows);
    for (size_t i = 0; i < rows; ++i) row_ids[i] = i;
    for (size_t j = 0; j < cols; ++j) col_ids[j] = j;
    smawk_rec(row_ids, col_ids, entry, argmax);
    return argmax;
}

}  // namespace l1geo
