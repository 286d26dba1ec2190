#include "weave/fingerprint.hpp"

#include <algorithm>
#include <bit>

namespace weave {

Fingerprint fingerprint(const CrossingMatrix& M) {
    const int m = M.warps(), n = M.wefts();
    Fingerprint fp;
    fp.row_sums.reserve(m);
    fp.col_sums.reserve(n);

    for (int i = 0; i < m; ++i) {
        const int s = std::popcount(M.row_bits(i));
        fp.row_sums.push_back(s);
        fp.total_ones += s;
    }
    std::vector<std::uint64_t> cols(n);
    for (int j = 0; j < n; ++j) {
        cols[j] = M.col_bits(j);
        fp.col_sums.push_back(std::popcount(cols[j]));
    }
    std::sort(fp.row_sums.begin(), fp.row_sums.end());
    std::sort(fp.col_sums.begin(), fp.col_sums.end());

    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            if (comparable_bits(M.row_bits(i), M.row_bits(k))) ++fp.comparable_row_pairs;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (comparable_bits(cols[j], cols[k])) ++fp.comparable_col_pairs;

    return fp;
}

}  // namespace weave
