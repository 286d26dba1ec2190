#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "weave/fingerprint.hpp"
#include "weave/matrix.hpp"
#include "weave/moves.hpp"

using namespace weave;
using weave::testing::for_each_matrix;
using weave::testing::mat;
using weave::testing::random_matrix;

TEST_CASE("validate accepts well-formed input") {
    const CrossingMatrix M = CrossingMatrix::validate({{0, 1}, {1, 0}});
    CHECK(M.warps() == 2);
    CHECK(M.wefts() == 2);
    CHECK(M.at(0, 1) == 1);
    CHECK(M.at(1, 1) == 0);
}

TEST_CASE("validate rejects non-binary entries and ragged rows") {
    CHECK_THROWS_AS(CrossingMatrix::validate({{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(CrossingMatrix::validate({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("comparable on bit vectors") {
    CHECK(comparable({0, 1, 0}, {1, 1, 0}));
    CHECK_FALSE(comparable({0, 1}, {1, 0}));
    CHECK_THROWS_AS(comparable({0, 1}, {0}), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> u(1 + static_cast<int>(rng() % 8));
        for (auto& b : u) b = static_cast<int>(rng() & 1u);
        CHECK(comparable(u, u));  // reflexive
        std::vector<int> v(u.size());
        for (auto& b : v) b = static_cast<int>(rng() & 1u);
        CHECK(comparable(u, v) == comparable(v, u));  // symmetric
    }
}

TEST_CASE("can_apply: swaps need comparable neighbors, translations are free") {
    CHECK_FALSE(can_apply(mat("01/10"), SwapWarps{0}));
    CHECK(can_apply(mat("01/11"), SwapWarps{0}));
    CHECK(can_apply(mat("01/10"), Translate{1, 1}));
    CHECK(can_apply(mat("01/10"), Translate{-3, 12}));
    CHECK_THROWS_AS(can_apply(mat("01/10"), SwapWarps{2}), std::out_of_range);
    CHECK_THROWS_AS(can_apply(mat("01/10"), SwapWefts{-1}), std::out_of_range);
}

TEST_CASE("apply_move on the spec examples") {
    CHECK(apply_move(mat("01/10"), Translate{1, 0}) == mat("10/01"));
    CHECK(apply_move(mat("01/11"), SwapWarps{0}) == mat("11/01"));
    CHECK_THROWS_AS(apply_move(mat("01/10"), SwapWarps{0}), std::invalid_argument);
}

TEST_CASE("cyclic swaps wrap around") {
    // SwapWarps at the last position exchanges the last and first warps
    const CrossingMatrix M = mat("00/01/11");
    REQUIRE(can_apply(M, SwapWarps{2}));  // rows "11" and "00" are comparable
    CHECK(apply_move(M, SwapWarps{2}) == mat("11/01/00"));
}

TEST_CASE("dihedral operations match their definitions and are involutions") {
    CHECK(complement(mat("01/10")) == mat("10/01"));
    CHECK(transpose_dual(mat("01")) == mat("1/0"));
    CHECK(reflect_warps(mat("01/11")) == mat("11/01"));
    CHECK(reflect_wefts(mat("011/000")) == mat("110/000"));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const CrossingMatrix M = random_matrix(1 + static_cast<int>(rng() % 5),
                                               1 + static_cast<int>(rng() % 7), rng);
        CHECK(transpose_dual(transpose_dual(M)) == M);
        CHECK(reflect_warps(reflect_warps(M)) == M);
        CHECK(reflect_wefts(reflect_wefts(M)) == M);
        CHECK(complement(complement(M)) == M);
    }
}

TEST_CASE("text form round-trips") {
    CHECK(to_text(mat("01/10")) == "01/10");
    CHECK(to_text(CrossingMatrix(0, 0)) == "");
    CHECK(from_text("") == CrossingMatrix(0, 0));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        const CrossingMatrix M = random_matrix(1 + static_cast<int>(rng() % 4),
                                               1 + static_cast<int>(rng() % 4), rng);
        CHECK(from_text(to_text(M)) == M);
    }
}

TEST_CASE("codes enumerate in text order") {
    CHECK(to_code(mat("00/00")) == 0);
    CHECK(to_code(mat("00/01")) == 1);
    CHECK(to_code(mat("10/00")) == 8);
    for (std::uint64_t code = 0; code < 16; ++code) {
        CHECK(to_code(from_code(2, 2, code)) == code);
    }
    // ascending code order is lexicographic order of the text form
    for (std::uint64_t code = 0; code + 1 < 16; ++code) {
        CHECK(to_text(from_code(2, 2, code)) < to_text(from_code(2, 2, code + 1)));
    }
}

TEST_CASE("fingerprint on the spec examples") {
    const Fingerprint fp = fingerprint(mat("01/10"));
    CHECK(fp.total_ones == 2);
    CHECK(fp.row_sums == std::vector<int>{1, 1});
    CHECK(fp.col_sums == std::vector<int>{1, 1});
    CHECK(fp.comparable_row_pairs == 0);
    CHECK(fp.comparable_col_pairs == 0);

    const Fingerprint fp2 = fingerprint(mat("11/00"));
    CHECK(fp2.row_sums == std::vector<int>{0, 2});
    CHECK(fp2.comparable_row_pairs == 1);
}

namespace {

std::vector<Move> all_legal_moves(const CrossingMatrix& M) {
    std::vector<Move> moves{Translate{1, 0}, Translate{0, 1}};
    for (int i = 0; i < M.warps(); ++i)
        if (can_apply(M, SwapWarps{i})) moves.emplace_back(SwapWarps{i});
    for (int j = 0; j < M.wefts(); ++j)
        if (can_apply(M, SwapWefts{j})) moves.emplace_back(SwapWefts{j});
    return moves;
}

}  // namespace

TEST_CASE("fingerprint is invariant under every legal move, exhaustively to 4x4") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            for_each_matrix(m, n, [](const CrossingMatrix& M) {
                const Fingerprint fp = fingerprint(M);
                for (const Move& mv : all_legal_moves(M)) {
                    CHECK(fingerprint(apply_move(M, mv)) == fp);
                }
            });
        }
    }
}

TEST_CASE("translations compose additively") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        const int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
        const CrossingMatrix M = random_matrix(m, n, rng);
        const int a = static_cast<int>(rng() % 7), b = static_cast<int>(rng() % 7);
        const int a2 = static_cast<int>(rng() % 7), b2 = static_cast<int>(rng() % 7);
        CHECK(apply_move(apply_move(M, Translate{a, b}), Translate{a2, b2}) ==
              apply_move(M, Translate{a + a2, b + b2}));
    }
}

TEST_CASE("a swap applied twice restores the diagram") {
    for_each_matrix(3, 3, [](const CrossingMatrix& M) {
        for (int i = 0; i < 3; ++i) {
            if (!can_apply(M, SwapWarps{i})) continue;
            CHECK(apply_move(apply_move(M, SwapWarps{i}), SwapWarps{i}) == M);
        }
    });
}

TEST_CASE("warp swaps and weft swaps commute") {
    for_each_matrix(3, 3, [](const CrossingMatrix& M) {
        for (int i = 0; i < 3; ++i) {
            if (!can_apply(M, SwapWarps{i})) continue;
            for (int j = 0; j < 3; ++j) {
                if (!can_apply(M, SwapWefts{j})) continue;
                CHECK(apply_move(apply_move(M, SwapWarps{i}), SwapWefts{j}) ==
                      apply_move(apply_move(M, SwapWefts{j}), SwapWarps{i}));
            }
        }
    });
}

TEST_CASE("swap legality is invariant under uniform column permutations") {
    for_each_matrix(3, 3, [](const CrossingMatrix& M) {
        for (int j = 0; j < 3; ++j) {
            if (!can_apply(M, SwapWefts{j})) continue;
            const CrossingMatrix N = apply_move(M, SwapWefts{j});
            for (int i = 0; i < 3; ++i) {
                CHECK(can_apply(M, SwapWarps{i}) == can_apply(N, SwapWarps{i}));
            }
        }
    });
}

TEST_CASE("inverse undoes every move") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 40; ++t) {
        const CrossingMatrix M = random_matrix(2 + static_cast<int>(rng() % 3),
                                               2 + static_cast<int>(rng() % 3), rng);
        for (const Move& mv : all_legal_moves(M)) {
            CHECK(apply_move(apply_move(M, mv), inverse(M, mv)) == M);
        }
    }
}

TEST_CASE("degenerate shapes are representable but size-capped") {
    CHECK(CrossingMatrix(0, 5).warps() == 0);
    CHECK(CrossingMatrix(3, 0).wefts() == 0);
    CHECK_THROWS_AS(CrossingMatrix(65, 1), std::invalid_argument);
}
