#include "weave/moves.hpp"

namespace weave {

namespace {

int mod(int a, int m) {
    if (m <= 0) return 0;
    const int r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t rotate_row(std::uint64_t row, int shift, int n) {
    // result bit j = row bit (j + shift) mod n
    if (n == 0) return 0;
    shift = mod(shift, n);
    if (shift == 0) return row;
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return ((row >> shift) | (row << (n - shift))) & mask;
}

void check_swap_index(int pos, int count, const char* what) {
    if (pos < 0 || pos >= count) {
        throw std::out_of_range(std::string(what) + " position " + std::to_string(pos + 1) +
                                " out of range [1, " + std::to_string(count) + "]");
    }
}

}  // namespace

std::string to_string(const Move& mv) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return "translate " + std::to_string(m.da) + " " + std::to_string(m.db);
            } else if constexpr (std::is_same_v<T, SwapWarps>) {
                return "swap-warps " + std::to_string(m.i + 1);
            } else {
                return "swap-wefts " + std::to_string(m.j + 1);
            }
        },
        mv);
}

bool can_apply(const CrossingMatrix& M, const Move& mv) {
    return std::visit(
        [&M](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return true;
            } else if constexpr (std::is_same_v<T, SwapWarps>) {
                check_swap_index(m.i, M.warps(), "warp");
                return M.rows_comparable(m.i, (m.i + 1) % M.warps());
            } else {
                check_swap_index(m.j, M.wefts(), "weft");
                return M.cols_comparable(m.j, (m.j + 1) % M.wefts());
            }
        },
        mv);
}

CrossingMatrix apply_move(const CrossingMatrix& M, const Move& mv) {
    if (!can_apply(M, mv)) {
        throw std::invalid_argument("illegal move " + to_string(mv) +
                                    ": neighbors are not comparable");
    }
    const int m = M.warps(), n = M.wefts();
    CrossingMatrix R(m, n);
    std::visit(
        [&](const auto& mvv) {
            using T = std::decay_t<decltype(mvv)>;
            if constexpr (std::is_same_v<T, Translate>) {
                const int da = mod(mvv.da, m), db = mod(mvv.db, n);
                for (int i = 0; i < m; ++i) {
                    const std::uint64_t src = rotate_row(M.row_bits((i + da) % m), db, n);
                    for (int j = 0; j < n; ++j) R.set(i, j, static_cast<int>((src >> j) & 1u));
                }
            } else if constexpr (std::is_same_v<T, SwapWarps>) {
                const int a = mvv.i, b = (mvv.i + 1) % m;
                for (int i = 0; i < m; ++i) {
                    const int src = i == a ? b : i == b ? a : i;
                    for (int j = 0; j < n; ++j) R.set(i, j, M.at(src, j));
                }
            } else {
                const int a = mvv.j, b = (mvv.j + 1) % n;
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < n; ++j) {
                        const int src = j == a ? b : j == b ? a : j;
                        R.set(i, j, M.at(i, src));
                    }
                }
            }
        },
        mv);
    return R;
}

CrossingMatrix replay(const CrossingMatrix& M, const MoveSequence& moves) {
    CrossingMatrix cur = M;
    for (const Move& mv : moves) cur = apply_move(cur, mv);
    return cur;
}

Move inverse(const CrossingMatrix& M, const Move& mv) {
    return std::visit(
        [&M](const auto& m) -> Move {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Translate>) {
                return Translate{mod(-m.da, std::max(M.warps(), 1)),
                                 mod(-m.db, std::max(M.wefts(), 1))};
            } else {
                return m;  // swaps are self-inverse
            }
        },
        mv);
}

}  // namespace weave
