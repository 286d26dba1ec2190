#include "weave/matrix.hpp"

#include <bit>

namespace weave {

std::string to_string(const ComponentId& id) {
    std::string out = id.kind == ComponentKind::Warp ? "warp:" : "weft:";
    out += std::to_string(id.index + 1);
    return out;
}

CrossingMatrix::CrossingMatrix(int warps, int wefts) : m_(warps), n_(wefts) {
    if (warps < 0 || wefts < 0 || warps > kMaxDim || wefts > kMaxDim) {
        throw std::invalid_argument("matrix dimensions must lie in [0, 64]");
    }
    rows_.assign(static_cast<std::size_t>(m_), 0u);
}

CrossingMatrix CrossingMatrix::validate(const std::vector<std::vector<int>>& raw) {
    const int m = static_cast<int>(raw.size());
    const int n = raw.empty() ? 0 : static_cast<int>(raw.front().size());
    CrossingMatrix M(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(raw[i].size()) != n) {
            throw std::invalid_argument("ragged input: row " + std::to_string(i + 1) +
                                        " has " + std::to_string(raw[i].size()) +
                                        " entries, expected " + std::to_string(n));
        }
        for (int j = 0; j < n; ++j) {
            const int v = raw[i][j];
            if (v != 0 && v != 1) {
                throw std::invalid_argument("non-binary entry " + std::to_string(v) +
                                            " at row " + std::to_string(i + 1) +
                                            ", column " + std::to_string(j + 1));
            }
            M.set(i, j, v);
        }
    }
    return M;
}

void CrossingMatrix::set(int i, int j, int value) {
    if (value)
        rows_[i] |= std::uint64_t{1} << j;
    else
        rows_[i] &= ~(std::uint64_t{1} << j);
}

std::uint64_t CrossingMatrix::col_bits(int j) const {
    std::uint64_t col = 0;
    for (int i = 0; i < m_; ++i) {
        col |= ((rows_[i] >> j) & 1u) << i;
    }
    return col;
}

bool CrossingMatrix::rows_comparable(int i0, int i1) const {
    return comparable_bits(rows_[i0], rows_[i1]);
}

bool CrossingMatrix::cols_comparable(int j0, int j1) const {
    return comparable_bits(col_bits(j0), col_bits(j1));
}

std::size_t MatrixHash::operator()(const CrossingMatrix& M) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    };
    mix(static_cast<std::uint64_t>(M.warps()) << 32 | static_cast<std::uint32_t>(M.wefts()));
    for (int i = 0; i < M.warps(); ++i) mix(M.row_bits(i));
    return static_cast<std::size_t>(h);
}

bool comparable(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("comparable: length mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    bool le = true, ge = true;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k] > v[k]) le = false;
        if (u[k] < v[k]) ge = false;
    }
    return le || ge;
}

CrossingMatrix transpose_dual(const CrossingMatrix& M) {
    CrossingMatrix R(M.wefts(), M.warps());
    for (int i = 0; i < M.warps(); ++i)
        for (int j = 0; j < M.wefts(); ++j) R.set(j, i, 1 - M.at(i, j));
    return R;
}

CrossingMatrix reflect_warps(const CrossingMatrix& M) {
    CrossingMatrix R(M.warps(), M.wefts());
    for (int i = 0; i < M.warps(); ++i)
        for (int j = 0; j < M.wefts(); ++j) R.set(i, j, M.at(M.warps() - 1 - i, j));
    return R;
}

CrossingMatrix reflect_wefts(const CrossingMatrix& M) {
    CrossingMatrix R(M.warps(), M.wefts());
    for (int i = 0; i < M.warps(); ++i)
        for (int j = 0; j < M.wefts(); ++j) R.set(i, j, M.at(i, M.wefts() - 1 - j));
    return R;
}

CrossingMatrix complement(const CrossingMatrix& M) {
    CrossingMatrix R(M.warps(), M.wefts());
    for (int i = 0; i < M.warps(); ++i)
        for (int j = 0; j < M.wefts(); ++j) R.set(i, j, 1 - M.at(i, j));
    return R;
}

std::string to_text(const CrossingMatrix& M) {
    std::string out;
    if (M.warps() > 0) out.reserve(static_cast<std::size_t>(M.warps()) * (M.wefts() + 1));
    for (int i = 0; i < M.warps(); ++i) {
        if (i > 0) out.push_back('/');
        for (int j = 0; j < M.wefts(); ++j) out.push_back(M.at(i, j) ? '1' : '0');
    }
    return out;
}

CrossingMatrix from_text(std::string_view text) {
    if (text.empty()) return CrossingMatrix(0, 0);
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    while (true) {
        std::size_t slash = text.find('/', start);
        if (slash == std::string_view::npos) {
            rows.push_back(text.substr(start));
            break;
        }
        rows.push_back(text.substr(start, slash - start));
        start = slash + 1;
    }
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    if (m > CrossingMatrix::kMaxDim || n > CrossingMatrix::kMaxDim) {
        throw std::invalid_argument("matrix dimensions must lie in [0, 64]");
    }
    CrossingMatrix M(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw std::invalid_argument("row " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(n) + " columns, got " +
                                        std::to_string(rows[i].size()));
        }
        for (int j = 0; j < n; ++j) {
            const char ch = rows[i][j];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("row " + std::to_string(i + 1) + ", column " +
                                            std::to_string(j + 1) + ": invalid character '" +
                                            std::string(1, ch) + "'");
            }
            M.set(i, j, ch == '1');
        }
    }
    return M;
}

bool lex_less(const CrossingMatrix& a, const CrossingMatrix& b) {
    const int m = std::min(a.warps(), b.warps());
    for (int i = 0; i < m; ++i) {
        const std::uint64_t diff = a.row_bits(i) ^ b.row_bits(i);
        if (diff != 0) {
            const int j = std::countr_zero(diff);  // first differing column
            return a.at(i, j) < b.at(i, j);
        }
    }
    return a.warps() < b.warps();
}

std::uint64_t to_code(const CrossingMatrix& M) {
    const int m = M.warps(), n = M.wefts();
    if (m * n > 64) throw std::invalid_argument("to_code requires at most 64 crossings");
    std::uint64_t code = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(M.at(i, j));
    return code;
}

CrossingMatrix from_code(int warps, int wefts, std::uint64_t code) {
    if (warps * wefts > 64) throw std::invalid_argument("from_code requires at most 64 crossings");
    CrossingMatrix M(warps, wefts);
    for (int i = warps - 1; i >= 0; --i)
        for (int j = wefts - 1; j >= 0; --j) {
            M.set(i, j, static_cast<int>(code & 1u));
            code >>= 1;
        }
    return M;
}

}  // namespace weave
