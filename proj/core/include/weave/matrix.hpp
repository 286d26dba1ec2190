#ifndef WEAVE_MATRIX_HPP
#define WEAVE_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weave {

/// Thrown when an orbit enumeration exceeds its state budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a census request exceeds the configured size ceiling.
class CeilingExceeded : public std::runtime_error {
public:
    explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

enum class ComponentKind { Warp, Weft };

/// One component of a weave. Indices are 0-based in the API; all external
/// formats (CLI text, JSON) print them 1-based.
struct ComponentId {
    ComponentKind kind;
    int index;

    friend bool operator==(const ComponentId&, const ComponentId&) = default;
    friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

/// "warp:3" / "weft:1" with 1-based index.
std::string to_string(const ComponentId& id);

/**
 * The weaving diagram of an m x n weave: warp i crosses weft j above
 * (entry 1) or below (entry 0). Rows are warps, columns are wefts.
 *
 * Degenerate m x 0 and 0 x n shapes are representable. Dimensions are
 * capped at 64 so a row or column always fits one machine word.
 */
class CrossingMatrix {
public:
    static constexpr int kMaxDim = 64;

    CrossingMatrix() = default;

    /// Zero matrix of the given shape.
    CrossingMatrix(int warps, int wefts);

    /// Checks that `raw` is rectangular with entries in {0,1}.
    static CrossingMatrix validate(const std::vector<std::vector<int>>& raw);

    int warps() const { return m_; }
    int wefts() const { return n_; }

    int at(int i, int j) const { return static_cast<int>((rows_[i] >> j) & 1u); }
    void set(int i, int j, int value);

    /// Row i as a bitmask, bit j = c(i,j).
    std::uint64_t row_bits(int i) const { return rows_[i]; }
    /// Column j as a bitmask, bit i = c(i,j).
    std::uint64_t col_bits(int j) const;

    bool rows_comparable(int i0, int i1) const;
    bool cols_comparable(int j0, int j1) const;

    friend bool operator==(const CrossingMatrix& a, const CrossingMatrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct MatrixHash {
    std::size_t operator()(const CrossingMatrix& M) const;
};

/// Pointwise u <= v or u >= v. Arguments must have equal length.
bool comparable(const std::vector<int>& u, const std::vector<int>& v);

/// Mask variant of `comparable`; both masks must use the same bit width.
inline bool comparable_bits(std::uint64_t u, std::uint64_t v) {
    return (u & ~v) == 0 || (v & ~u) == 0;
}

/// Exchanges warp and weft roles; the over/under sense flips with them:
/// result(j,i) = 1 - M(i,j). An involution.
CrossingMatrix transpose_dual(const CrossingMatrix& M);

/// Reverses warp order: result(i,j) = M(m-1-i, j). An involution.
CrossingMatrix reflect_warps(const CrossingMatrix& M);

/// Reverses weft order: result(i,j) = M(i, n-1-j). An involution.
CrossingMatrix reflect_wefts(const CrossingMatrix& M);

/// Depth flip: result(i,j) = 1 - M(i,j). An involution.
CrossingMatrix complement(const CrossingMatrix& M);

/// Row-major text form, rows of '0'/'1' joined by '/': [[0,1],[1,0]] -> "01/10".
std::string to_text(const CrossingMatrix& M);

/// Inverse of to_text. Throws std::invalid_argument with a row/column
/// position on malformed input. "" parses as the empty 0 x 0 matrix.
CrossingMatrix from_text(std::string_view text);

/// Strict weak order matching lexicographic order of to_text().
/// Only meaningful between matrices of equal shape.
bool lex_less(const CrossingMatrix& a, const CrossingMatrix& b);

/// Row-major integer code of the diagram, entry (0,0) most significant.
/// Ascending code order equals lexicographic order of to_text().
/// Requires warps*wefts <= 64.
std::uint64_t to_code(const CrossingMatrix& M);
CrossingMatrix from_code(int warps, int wefts, std::uint64_t code);

}  // namespace weave

#endif  // WEAVE_MATRIX_HPP
