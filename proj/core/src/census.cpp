#include "weave/census.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "weave/hyperbolicity.hpp"
#include "weave/isotopy.hpp"

namespace weave {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

void check_shape(int m, int n, int ceiling, const char* what) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument(std::string(what) + " requires m, n >= 1");
    }
    if (m * n > ceiling) {
        throw CeilingExceeded(std::string(what) + ": " + std::to_string(m) + "x" +
                              std::to_string(n) + " exceeds the ceiling of " +
                              std::to_string(ceiling) + " crossings");
    }
}

// Counts hyperbolic crossing functions and, for m,n >= 2, those with no
// adjacent comparable pair, over a contiguous code range.
struct ShardCounts {
    std::int64_t hyp = 0;
    std::int64_t nc = 0;
};

ShardCounts count_range(int m, int n, std::uint64_t lo, std::uint64_t hi) {
    ShardCounts counts;
    const bool nc_applicable = m >= 2 && n >= 2;
    for (std::uint64_t code = lo; code < hi; ++code) {
        const CrossingMatrix M = from_code(m, n, code);
        if (is_hyperbolic_flag(M)) ++counts.hyp;
        if (nc_applicable && no_adjacent_comparable(M)) ++counts.nc;
    }
    return counts;
}

ShardCounts count_all(int m, int n, int jobs) {
    const std::uint64_t total = std::uint64_t{1} << (m * n);
    if (jobs <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }
    const int shards = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
    if (shards <= 1) return count_range(m, n, 0, total);

    std::vector<ShardCounts> partial(shards);
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (int s = 0; s < shards; ++s) {
        const std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
        const std::uint64_t len = total / shards + (static_cast<std::uint64_t>(s) < total % shards);
        workers.emplace_back(
            [m, n, lo, len, &partial, s] { partial[s] = count_range(m, n, lo, lo + len); });
    }
    for (auto& t : workers) t.join();
    ShardCounts sum;
    for (const ShardCounts& p : partial) {
        sum.hyp += p.hyp;
        sum.nc += p.nc;
    }
    return sum;
}

}  // namespace

Enumerator::Enumerator(int m, int n, int ceiling) : m_(m), n_(n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate requires m, n >= 0");
    if (m * n > ceiling) {
        throw CeilingExceeded("enumerate: " + std::to_string(m) + "x" + std::to_string(n) +
                              " exceeds the ceiling of " + std::to_string(ceiling) +
                              " crossings");
    }
    total_ = std::uint64_t{1} << (m * n);
}

std::optional<CrossingMatrix> Enumerator::next() {
    if (next_code_ >= total_) return std::nullopt;
    return from_code(m_, n_, next_code_++);
}

CensusRow census(int m, int n, int jobs, int ceiling) {
    check_shape(m, n, ceiling, "census");
    CensusRow row;
    row.m = m;
    row.n = n;
    const std::uint64_t total = std::uint64_t{1} << (m * n);
    row.total = static_cast<std::int64_t>(total);
    row.upper_bound = ipow(ipow(2, m) - 2, n);
    row.lower_bound = (m >= 2 && n >= 2)
                          ? row.total - 2 * m * ipow(2, (m - 2) * n) * ipow(3, n) -
                                2 * n * ipow(2, m * (n - 2)) * ipow(3, m)
                          : 0;

    const ShardCounts counts = count_all(m, n, jobs);
    row.n_hyp = counts.hyp;
    row.n_nc = counts.nc;

    // class sweep: each orbit is expanded once, from its smallest unseen code
    std::vector<bool> seen(total, false);
    std::set<std::string> homeo_classes;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (seen[code]) continue;
        const CrossingMatrix rep = from_code(m, n, code);
        const Orbit orb = orbit(rep);
        for (const CrossingMatrix& member : orb.members()) {
            seen[to_code(member)] = true;
        }
        ++row.classes_isotopy;
        if (is_hyperbolic_flag(rep)) {
            ++row.classes_isotopy_hyp;
            homeo_classes.insert(homeo_canonical_form(rep).canonical);
        }
    }
    row.classes_homeo_hyp = static_cast<std::int64_t>(homeo_classes.size());
    return row;
}

bool bound_check(const CensusRow& row) {
    if (row.n_hyp > row.upper_bound) return false;
    if (row.n_nc < std::max<std::int64_t>(0, row.lower_bound)) return false;
    return row.n_nc <= row.n_hyp;
}

std::string census_csv_header() {
    return "m,n,total,n_hyp,n_nc,classes_isotopy,classes_isotopy_hyp,classes_homeo_hyp,"
           "upper_bound,lower_bound";
}

std::string census_csv_line(const CensusRow& r) {
    std::string line;
    for (std::int64_t v : {static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.n),
                           r.total, r.n_hyp, r.n_nc, r.classes_isotopy, r.classes_isotopy_hyp,
                           r.classes_homeo_hyp, r.upper_bound, r.lower_bound}) {
        if (!line.empty()) line.push_back(',');
        line += std::to_string(v);
    }
    return line;
}

std::vector<TrendRow> proportion_trend(int max_n, int ceiling) {
    if (max_n < 1) throw std::invalid_argument("proportion_trend requires max_n >= 1");
    check_shape(2, max_n, ceiling, "proportion_trend");
    check_shape(max_n, max_n, ceiling, "proportion_trend");

    std::vector<TrendRow> rows;
    rows.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        TrendRow row;
        row.n = n;
        row.hyp_fixed_m = count_all(2, n, 0).hyp;
        row.total_fixed_m = ipow(2, 2 * n);
        row.hyp_square = count_all(n, n, 0).hyp;
        row.total_square = ipow(2, n * n);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace weave
