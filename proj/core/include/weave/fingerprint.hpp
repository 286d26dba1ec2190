#ifndef WEAVE_FINGERPRINT_HPP
#define WEAVE_FINGERPRINT_HPP

#include <vector>

#include "weave/matrix.hpp"

namespace weave {

/**
 * Cheap invariant of the move equivalence class: crossings total, sorted
 * row/column sum multisets, and the number of comparable unordered row
 * and column pairs. Unequal fingerprints rule out isotopy; equality
 * proves nothing.
 */
struct Fingerprint {
    int total_ones = 0;
    std::vector<int> row_sums;  // sorted ascending
    std::vector<int> col_sums;  // sorted ascending
    int comparable_row_pairs = 0;
    int comparable_col_pairs = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const CrossingMatrix& M);

}  // namespace weave

#endif  // WEAVE_FINGERPRINT_HPP
