#ifndef WEAVE_CENSUS_HPP
#define WEAVE_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weave/matrix.hpp"

namespace weave {

/// Largest m*n a census or enumeration accepts by default.
inline constexpr int kDefaultCensusCeiling = 25;

/**
 * Exhaustive statistics for all 2^(mn) crossing functions of one shape.
 * n_hyp and n_nc count crossing functions, not classes; upper_bound and
 * lower_bound are the closed-form bounds they must respect (lower_bound
 * is 0 when either dimension is below 2, where the formula is undefined).
 */
struct CensusRow {
    int m = 0;
    int n = 0;
    std::int64_t total = 0;
    std::int64_t n_hyp = 0;
    std::int64_t n_nc = 0;
    std::int64_t classes_isotopy = 0;
    std::int64_t classes_isotopy_hyp = 0;
    std::int64_t classes_homeo_hyp = 0;
    std::int64_t upper_bound = 0;   // (2^m - 2)^n
    std::int64_t lower_bound = 0;   // 2^(mn) - 2m 2^((m-2)n) 3^n - 2n 2^(m(n-2)) 3^m

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/**
 * Streams all 2^(mn) diagrams of a shape in ascending row-major code
 * order (equivalently, lexicographic order of their text form).
 * Throws CeilingExceeded when m*n is past the ceiling.
 */
class Enumerator {
public:
    Enumerator(int m, int n, int ceiling = kDefaultCensusCeiling);

    std::optional<CrossingMatrix> next();
    std::uint64_t total() const { return total_; }

private:
    int m_, n_;
    std::uint64_t total_, next_code_ = 0;
};

/**
 * Full census of one shape: per-diagram counts plus class counts obtained
 * by sweeping move orbits (each orbit visited once). The per-diagram
 * counts are sharded over `jobs` threads; results do not depend on the
 * worker count. Requires m, n >= 1.
 */
CensusRow census(int m, int n, int jobs = 0, int ceiling = kDefaultCensusCeiling);

/// Bound conformance: n_hyp <= (2^m-2)^n, n_nc >= max(0, lower_bound),
/// and n_nc <= n_hyp.
bool bound_check(const CensusRow& row);

/// CSV with the canonical column set, header included.
std::string census_csv_header();
std::string census_csv_line(const CensusRow& row);

/**
 * One row per n of the hyperbolic proportions N_hyp(2,n)/2^(2n) and
 * N_hyp(n,n)/2^(n*n), kept as exact integer pairs.
 */
struct TrendRow {
    int n = 0;
    std::int64_t hyp_fixed_m = 0;   // N_hyp(2, n)
    std::int64_t total_fixed_m = 0; // 2^(2n)
    std::int64_t hyp_square = 0;    // N_hyp(n, n)
    std::int64_t total_square = 0;  // 2^(n*n)
};

std::vector<TrendRow> proportion_trend(int max_n, int ceiling = kDefaultCensusCeiling);

}  // namespace weave

#endif  // WEAVE_CENSUS_HPP
