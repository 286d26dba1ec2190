#ifndef WEAVE_TEST_HELPERS_HPP
#define WEAVE_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "weave/hyperbolicity.hpp"
#include "weave/matrix.hpp"

namespace weave::testing {

inline CrossingMatrix mat(std::string_view text) { return from_text(text); }

/// Calls fn with every m x n diagram, in code order.
template <typename Fn>
void for_each_matrix(int m, int n, Fn&& fn) {
    const std::uint64_t total = std::uint64_t{1} << (m * n);
    for (std::uint64_t code = 0; code < total; ++code) {
        fn(from_code(m, n, code));
    }
}

inline CrossingMatrix random_matrix(int m, int n, std::mt19937_64& rng) {
    CrossingMatrix M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) M.set(i, j, static_cast<int>(rng() & 1u));
    return M;
}

/**
 * Independent layering oracle: tries every proper nonempty split of the
 * components into a bottom part B and top part A, accepting when each
 * crossing between the parts puts the A-component on top. Exponential in
 * m+n; usable up to m+n of about 20.
 */
inline bool layered_by_partition(const CrossingMatrix& M) {
    const int m = M.warps(), n = M.wefts(), V = m + n;
    // bit v of the subset mask: warp v for v < m, weft v-m otherwise
    const std::uint64_t all = (std::uint64_t{1} << V) - 1;
    for (std::uint64_t top = 1; top < all; ++top) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            const bool warp_top = (top >> i) & 1u;
            for (int j = 0; j < n && ok; ++j) {
                const bool weft_top = (top >> (m + j)) & 1u;
                if (warp_top && !weft_top && M.at(i, j) != 1) ok = false;
                if (!warp_top && weft_top && M.at(i, j) != 0) ok = false;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace weave::testing

#endif  // WEAVE_TEST_HELPERS_HPP
