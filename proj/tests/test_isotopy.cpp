#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "weave/formats.hpp"
#include "weave/isotopy.hpp"

using namespace weave;
using weave::testing::for_each_matrix;
using weave::testing::mat;
using weave::testing::random_matrix;

namespace {

// Independent closure under translations alone, for seeds whose swaps are
// all illegal.
std::set<std::string> translate_closure(const CrossingMatrix& M) {
    std::set<std::string> members;
    for (int a = 0; a < M.warps(); ++a)
        for (int b = 0; b < M.wefts(); ++b)
            members.insert(to_text(apply_move(M, Translate{a, b})));
    return members;
}

std::set<std::string> orbit_texts(const Orbit& orb) {
    std::set<std::string> members;
    for (const CrossingMatrix& M : orb.members()) members.insert(to_text(M));
    return members;
}

}  // namespace

TEST_CASE("orbit of a 1x1 diagram is trivial") {
    const Orbit orb = orbit(mat("1"));
    CHECK(orb.size() == 1);
    CHECK(orb.contains(mat("1")));
}

TEST_CASE("orbit of the alternating 2x2 diagram is its translate set") {
    const CrossingMatrix M = mat("01/10");
    // no swap is legal, so the orbit is exactly the deduplicated translates
    const Orbit orb = orbit(M);
    CHECK(orbit_texts(orb) == translate_closure(M));
    CHECK(orb.size() == 2);
}

TEST_CASE("the constant diagram is fixed by every move") {
    CHECK(orbit(mat("11/11")).size() == 1);
}

TEST_CASE("orbit enforces its state budget") {
    CHECK_THROWS_AS(orbit(mat("01/10"), 1), BudgetExceeded);
}

TEST_CASE("canonical_form picks the least translate") {
    CHECK(canonical_form(mat("10/01")).canonical == "01/10");
    CHECK(canonical_form(mat("01/10")).class_size == 2);
}

TEST_CASE("canonical_form is idempotent, exhaustively at 3x3") {
    for_each_matrix(3, 3, [](const CrossingMatrix& M) {
        const CanonicalForm cf = canonical_form(M);
        CHECK(canonical_form(from_text(cf.canonical)) == cf);
    });
}

TEST_CASE("canonical witness replays to the canonical member") {
    for_each_matrix(2, 3, [](const CrossingMatrix& M) {
        const CanonicalForm cf = canonical_form(M);
        CHECK(to_text(replay(M, canonical_witness(M))) == cf.canonical);
    });
}

TEST_CASE("the three 8x8 basic weaves have pairwise distinct canonical forms") {
    const std::string p = canonical_form(plain(8, 8).matrix).canonical;
    const std::string t = canonical_form(twill(8, 8, 2, 2).matrix).canonical;
    const std::string s = canonical_form(satin(8, 3).matrix).canonical;
    CHECK(p != t);
    CHECK(p != s);
    CHECK(t != s);
}

TEST_CASE("is_isotopic accepts translates and rejects different fingerprints") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        const CrossingMatrix M = random_matrix(2 + static_cast<int>(rng() % 2),
                                               2 + static_cast<int>(rng() % 2), rng);
        CHECK(is_isotopic(M, apply_move(M, Translate{1, 0})));
        CHECK(is_isotopic(M, M));
    }
    CHECK_FALSE(is_isotopic(mat("01/10"), mat("11/00")));
    CHECK_FALSE(is_isotopic(mat("01"), mat("0/1")));  // shape mismatch
}

TEST_CASE("is_isotopic agrees with canonical form equality") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 150; ++t) {
        const CrossingMatrix A = random_matrix(3, 3, rng);
        const CrossingMatrix B = random_matrix(3, 3, rng);
        CHECK(is_isotopic(A, B) == (canonical_form(A).canonical == canonical_form(B).canonical));
    }
}

TEST_CASE("orbit membership is symmetric") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const CrossingMatrix A = random_matrix(3, 3, rng);
        const Orbit orb = orbit(A);
        const CrossingMatrix B = orb.member(rng() % orb.size());
        CHECK(is_isotopic(A, B));
        CHECK(is_isotopic(B, A));
    }
}

TEST_CASE("orbit sizes over all classes sum to the matrix count, m,n <= 3") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            const std::uint64_t total = std::uint64_t{1} << (m * n);
            std::vector<bool> seen(total, false);
            std::uint64_t covered = 0;
            for (std::uint64_t code = 0; code < total; ++code) {
                if (seen[code]) continue;
                const Orbit orb = orbit(from_code(m, n, code));
                for (const CrossingMatrix& member : orb.members()) {
                    const std::uint64_t c = to_code(member);
                    CHECK_FALSE(seen[c]);  // orbits are disjoint
                    seen[c] = true;
                }
                covered += orb.size();
            }
            CHECK(covered == total);
        }
    }
}

TEST_CASE("isotopy_witness replays across whole orbits, m,n <= 3") {
    for (int m = 2; m <= 3; ++m) {
        for (int n = 2; n <= 3; ++n) {
            const std::uint64_t total = std::uint64_t{1} << (m * n);
            std::vector<bool> seen(total, false);
            for (std::uint64_t code = 0; code < total; ++code) {
                if (seen[code]) continue;
                const CrossingMatrix rep = from_code(m, n, code);
                const Orbit orb = orbit(rep);
                for (const CrossingMatrix& member : orb.members()) {
                    seen[to_code(member)] = true;
                    CHECK(replay(rep, isotopy_witness(rep, member)) == member);
                }
            }
        }
    }
}

TEST_CASE("isotopy_witness of a diagram with itself is empty") {
    CHECK(isotopy_witness(mat("01/10"), mat("01/10")).empty());
}

TEST_CASE("isotopy_witness rejects non-isotopic inputs") {
    CHECK_THROWS_AS(isotopy_witness(mat("01/10"), mat("11/00")), std::invalid_argument);
    CHECK_THROWS_AS(isotopy_witness(mat("01"), mat("0/1")), std::invalid_argument);
}

TEST_CASE("homeo canonical form is invariant under each generator") {
    auto check_invariance = [](const CrossingMatrix& M) {
        const CanonicalForm base = homeo_canonical_form(M);
        CHECK(homeo_canonical_form(complement(M)) == base);
        CHECK(homeo_canonical_form(transpose_dual(M)) == base);
        CHECK(homeo_canonical_form(reflect_warps(M)) == base);
        CHECK(homeo_canonical_form(reflect_wefts(M)) == base);
    };
    for_each_matrix(2, 2, check_invariance);
    for_each_matrix(2, 3, check_invariance);  // exercises the shape-crossing case
    std::mt19937_64 rng(37);
    for (int t = 0; t < 25; ++t) check_invariance(random_matrix(3, 3, rng));
}

TEST_CASE("homeo canonical form is invariant under moves") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 15; ++t) {
        const CrossingMatrix M = random_matrix(3, 3, rng);
        const CanonicalForm base = homeo_canonical_form(M);
        const Orbit orb = orbit(M);
        CHECK(homeo_canonical_form(orb.member(rng() % orb.size())) == base);
    }
}

TEST_CASE("symmetry_images yields at most 16 diagrams and contains the input") {
    std::mt19937_64 rng(43);
    const CrossingMatrix M = random_matrix(3, 4, rng);
    const auto images = symmetry_images(M);
    CHECK(images.size() <= 16);
    CHECK(std::find(images.begin(), images.end(), M) != images.end());
}
